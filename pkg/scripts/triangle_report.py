"""Print the refined q-triangle R_n^k with its row checks.

Each row n lists R_n^0 .. R_n^n as polynomials in q.  The report appends two
sanity columns per row: the sum of values at q = 1 (must be 2^n) and the
leftmost entry's match against the enumerated crossing distribution of
S_n(312, 132).

Usage: python3 scripts/triangle_report.py [--nmax N] [--check]
"""

import argparse
import sys

from crossperm.enumeration import DistributionQuery, distribution
from crossperm.qseries import r_table


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nmax", type=int, default=8)
    parser.add_argument(
        "--check",
        action="store_true",
        help="also enumerate S_n(312,132) and compare against R_n^0",
    )
    args = parser.parse_args(argv)

    table = r_table(args.nmax)
    patterns = ((3, 1, 2), (1, 3, 2))
    width = max(
        len(cell.text()) for row in table for cell in row
    )
    for n, row in enumerate(table):
        cells = "  ".join(cell.text().ljust(width) for cell in row)
        at_one = sum(cell(1) for cell in row)
        line = f"n={n:2d}  {cells}  | sum(q=1) = {at_one}"
        if at_one != 2 ** n:
            print(f"{line}  MISMATCH (expected {2 ** n})")
            return 1
        if args.check:
            brute = distribution(DistributionQuery(n=n, patterns=patterns)).polynomial
            verdict = "ok" if brute == row[0] else "MISMATCH"
            line += f"  | R_n^0 vs enumeration: {verdict}"
            if verdict != "ok":
                print(line)
                return 1
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
