"""Monte-Carlo codimension of {rank phi <= r} for a grid of (n, r) over F_p.

    python scripts/codim_scan.py --ns 4 6 8 --p 101 --samples 100000
"""

import argparse
from math import comb

from skewham.mc import SampleConfig, mc_codim_estimate


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ns", type=int, nargs="+", default=[4, 6, 8])
    ap.add_argument("--p", type=int, default=101)
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    print(f"{'n':>3} {'r':>3} {'hits':>8} {'-log_p f':>9} {'est':>5} {'C(n-r+1,2)':>11}")
    for n in args.ns:
        for r in range(n, max(1, n - 3), -1):
            est = mc_codim_estimate(SampleConfig(n, r, args.p, args.samples, args.seed), args.workers)
            print(f"{n:>3} {r:>3} {est.hits:>8} {est.log_ratio:>9.3f} {est.codim!s:>5} {comb(n - r + 1, 2):>11}")


if __name__ == "__main__":
    main()
