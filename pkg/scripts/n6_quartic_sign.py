"""Which sign makes gamma4^2 +- 4 gamma2 vanish on the image of phi for n = 6?

    python scripts/n6_quartic_sign.py --samples 200
"""

import argparse
import random
from collections import Counter

from skewham.commutator import phi
from skewham.fields import parse_field
from skewham.image import gamma_coefficients
from skewham.symplectic import random_skew


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--field", default="q")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    F = parse_field(args.field)
    rng = random.Random(args.seed)
    tally = Counter()
    for _ in range(args.samples):
        g = gamma_coefficients(phi(random_skew(6, rng, F), random_skew(6, rng, F)))
        tally["plus"] += F.reduce(g.gamma4**2 + 4 * g.gamma2) == 0
        tally["minus"] += F.reduce(g.gamma4**2 - 4 * g.gamma2) == 0
    print(f"samples {args.samples} over {F.name}")
    print(f"gamma4^2 + 4 gamma2 = 0 on {tally['plus']}")
    print(f"gamma4^2 - 4 gamma2 = 0 on {tally['minus']}")


if __name__ == "__main__":
    main()
