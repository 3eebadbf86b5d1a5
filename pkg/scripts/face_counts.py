"""f-vectors of the face complex and the h-vectors they imply.

Converts each f-vector to an h-vector through the standard f/h relation
and compares with the determinantal numerator.  Also times the two face
counting routes.

    python scripts/face_counts.py --max-n 7
"""

import argparse
import time

from pfhilbert.exact_arith import IntPolynomial
from pfhilbert.hilbert import numerator
from pfhilbert.params import grid
from pfhilbert.paths import f_vector


def h_from_f(f):
    # sum_i f_{i-1} t^i (1-t)^{d-i}, with f_{-1} = 1
    d = len(f)
    one_minus = IntPolynomial([1, -1])
    t = IntPolynomial.z()
    total = one_minus ** d
    for i, fi in enumerate(f, start=1):
        total = total + fi * t ** i * one_minus ** (d - i)
    return total


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--dfs-max-n", type=int, default=6, help="also time face-by-face enumeration up to here")
    args = ap.parse_args()

    for p in grid(args.max_n):
        if p.r == 0:
            continue
        t0 = time.perf_counter()
        f = f_vector(p, "transfer")
        t_transfer = time.perf_counter() - t0
        timing = f"transfer {t_transfer:.3f}s"
        if p.n <= args.dfs_max_n:
            t0 = time.perf_counter()
            same = f_vector(p, "dfs") == f
            timing += f", dfs {time.perf_counter() - t0:.3f}s ({'same' if same else 'DIFFERENT'})"
        h = h_from_f(f)
        ok = "ok" if h == numerator(p) else "MISMATCH"
        print(f"{p}: faces={sum(f) + 1:<9} h={list(h.coeffs)} {ok}  [{timing}]")


if __name__ == "__main__":
    main()
