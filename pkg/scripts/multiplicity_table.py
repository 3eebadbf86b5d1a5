"""Table of multiplicities e(n, r) with a column per closed formula.

    python scripts/multiplicity_table.py --max-n 16
"""

import argparse

from pfhilbert.multiplicity import ALL_METHODS, all_multiplicities
from pfhilbert.params import RingParams


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--r", type=int, nargs="*", default=[1, 2, 3])
    args = ap.parse_args()

    header = ["n", "r", *ALL_METHODS, "agree"]
    print("  ".join(f"{h:>12}" for h in header))
    for r in args.r:
        for n in range(2 * r, args.max_n + 1):
            vals = all_multiplicities(RingParams(n, r))
            known = {v for v in vals.values() if v is not None}
            row = [n, r, *("-" if vals[m] is None else vals[m] for m in ALL_METHODS), len(known) == 1]
            print("  ".join(f"{str(c):>12}" for c in row))


if __name__ == "__main__":
    main()
