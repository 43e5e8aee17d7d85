"""Rank of the differential of phi at random points, over Q or F_p.

    python scripts/jacobian_ranks.py --ns 4 6 8 10 12 --samples 10
"""

import argparse
import random
import time
from math import comb

from skewham.fields import parse_field
from skewham.image import jacobian_rank
from skewham.symplectic import random_skew


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ns", type=int, nargs="+", default=[4, 6, 8, 10])
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--field", default="q")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    F = parse_field(args.field)
    for n in args.ns:
        rng = random.Random(f"{args.seed}:{n}")
        t0 = time.perf_counter()
        ranks = sorted({jacobian_rank(random_skew(n, rng, F), random_skew(n, rng, F)) for _ in range(args.samples)})
        dt = time.perf_counter() - t0
        print(f"n={n:>2}  ranks={ranks}  C(n+1,2)={comb(n + 1, 2)}  ({dt:.2f}s)")


if __name__ == "__main__":
    main()
