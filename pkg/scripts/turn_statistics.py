"""Distribution of NE-turns over nonintersecting families against the numerator.

    python scripts/turn_statistics.py --max-n 9
"""

import argparse
from collections import Counter

from pfhilbert.hilbert import numerator
from pfhilbert.params import grid
from pfhilbert.paths import enumerate_families, family_turns, lgv_hankel


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()

    for p in grid(args.max_n):
        if p.r == 0:
            continue
        turns = Counter(family_turns(f) for f in enumerate_families(p))
        dist = [turns[m] for m in range(max(turns) + 1)]
        q = list(numerator(p).coeffs)
        print(f"{p}: families={sum(dist):<6} hankel={lgv_hankel(p):<6} turns={dist} "
              f"{'=' if dist == q else '!='} numerator")


if __name__ == "__main__":
    main()
