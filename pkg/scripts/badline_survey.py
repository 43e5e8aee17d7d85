"""Overlap between {L in ker S} and the diamond conditions, for every basis line.

Prints, per partition, the drop for each e_k next to the drop predicted from
membership in the union of the spans <e_{delta_i+1}, e_{delta_{i+1}+n/2}>.

    python scripts/badline_survey.py --n 8 10
"""

import argparse

from skewham.diamond import badline_dependence, expected_badline_drop
from skewham.symplectic import partitions


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[8])
    args = ap.parse_args()
    for n in args.n:
        for d in partitions(n // 2):
            rows = []
            for k in range(n):
                L = [int(i == k) for i in range(n)]
                got = badline_dependence(d, L)[1]
                want = expected_badline_drop(d, L)
                rows.append(f"e{k + 1}:{got}" + ("" if got == want else f"(pred {want})"))
            print(f"n={n} d={d}: " + " ".join(rows))


if __name__ == "__main__":
    main()
