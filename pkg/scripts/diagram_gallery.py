"""Emit a small SVG gallery for a permutation and its bijective images.

Given a 321-avoiding permutation, write four files into --outdir: the arc
diagram of the input, the arc diagram of its theta image, the Dyck path
psi(sigma) with tunnels marked, and the arc diagram of gamma(sigma).

Usage: python3 scripts/diagram_gallery.py [sigma] [--outdir DIR]
"""

import argparse
import pathlib
import sys

from crossperm import bijections, perms
from crossperm.cli import arc_diagram_svg, dyck_svg, fmt_perm, parse_perm


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("sigma", nargs="*", default=["24135867"])
    parser.add_argument("--outdir", default="gallery")
    args = parser.parse_args(argv)

    sigma = parse_perm(args.sigma)
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    theta_image = bijections.theta(sigma)
    word = bijections.psi(sigma)
    gamma_image = bijections.gamma(sigma)

    files = {
        "input-arcs.svg": arc_diagram_svg(sigma),
        "theta-arcs.svg": arc_diagram_svg(theta_image),
        "psi-dyck.svg": dyck_svg(word, with_tunnels=True),
        "gamma-arcs.svg": arc_diagram_svg(gamma_image),
    }
    for name, body in files.items():
        (outdir / name).write_text(body)

    left, centered, right = bijections.tunnel_counts(word)
    print(f"sigma       = {fmt_perm(sigma)}  (crs {perms.crs(sigma)})")
    print(f"theta image = {fmt_perm(theta_image)}  (crs {perms.crs(theta_image)})")
    print(f"gamma image = {fmt_perm(gamma_image)}  (crs {perms.crs(gamma_image)})")
    print(f"psi word    = {word}  (tunnels {left} left, {centered} centered, "
          f"{right} right)")
    print(f"wrote {len(files)} files to {outdir}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
