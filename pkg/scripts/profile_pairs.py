"""Closed forms versus enumeration for all solved pattern pairs.

For each pair with a formula, compare the formula value against the brute
force distribution at every n up to --nmax and report class size, maximum
crossing count, and both computation times.  A disagreement anywhere makes
the script exit nonzero, so it doubles as a long-running cross-check at
sizes beyond the test suite defaults.

Usage: python3 scripts/profile_pairs.py [--nmax N]
"""

import argparse
import sys
import time

from crossperm.enumeration import DistributionQuery, distribution
from crossperm.qseries import closed_form, dist_213_132

PAIRS = [
    "321,231", "123,132", "123,213", "321,132", "321,213", "123,321",
    "312,321", "312,231", "312,132", "312,213", "231,132", "231,213",
    "123,312", "123,231", "213,132",
]


def parse_pair(key):
    return tuple(tuple(int(c) for c in word) for word in key.split(","))


def formula_value(key, n):
    if key == "213,132":
        return dist_213_132(n)
    return closed_form(parse_pair(key), n)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nmax", type=int, default=12)
    args = parser.parse_args(argv)

    failures = 0
    print(f"{'pair':>9}  {'n':>3}  {'size':>6}  {'max crs':>7}  "
          f"{'formula ms':>10}  {'enum ms':>8}")
    for key in PAIRS:
        n = args.nmax
        start = time.perf_counter()
        formula = formula_value(key, n)
        formula_ms = (time.perf_counter() - start) * 1000.0

        start = time.perf_counter()
        result = distribution(DistributionQuery(n=n, patterns=parse_pair(key)))
        enum_ms = (time.perf_counter() - start) * 1000.0

        agree = formula == result.polynomial
        degree = len(formula.json_coeffs()) - 1 if formula.json_coeffs() else 0
        print(f"{key:>9}  {n:>3}  {result.count:>6}  {degree:>7}  "
              f"{formula_ms:>10.2f}  {enum_ms:>8.2f}"
              + ("" if agree else "  MISMATCH"))
        if not agree:
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
