"""Exact ground fields: the rationals and prime fields F_p (p odd).

Elements are plain Python numbers so that matrix kernels can use native
arithmetic and only normalise at the end:

* over ``QQ`` an element is an ``int`` or a ``Fraction`` that is not integral;
* over ``GF(p)`` an element is an ``int`` in ``[0, p)``.
"""

from __future__ import annotations

from random import Random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import UnsupportedField

Scalar = Union[int, Fraction]


class RationalField:
    characteristic = 0
    zero = 0
    one = 1

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def reduce(self, x):
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def __call__(self, x) -> Scalar:
        if isinstance(x, str):
            x = Fraction(x.strip())
        elif isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        elif isinstance(x, (int, Fraction)):
            pass
        elif hasattr(x, "numerator") and hasattr(x, "denominator"):
            x = Fraction(int(x.numerator), int(x.denominator))
        else:
            x = Fraction(x)
        return self.reduce(x)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return self.reduce(Fraction(a) / b)

    def inv(self, a):
        return self.div(1, a)

    def random(self, rng: Random, bound: int = 5) -> int:
        return rng.randint(-bound, bound)

    def fmt(self, x) -> str:
        return str(x)

    @property
    def name(self) -> str:
        return "Q"


@lru_cache(maxsize=None)
def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p == 2:
            raise UnsupportedField("characteristic 2 is not supported")
        if self.p < 3 or not _is_prime(self.p):
            raise UnsupportedField(f"{self.p} is not an odd prime")

    def __repr__(self) -> str:
        return f"GF({self.p})"

    @property
    def characteristic(self) -> int:
        return self.p

    zero = 0
    one = 1

    def reduce(self, x) -> int:
        if type(x) is int:
            return x % self.p
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def __call__(self, x) -> int:
        if isinstance(x, str):
            x = Fraction(x.strip())
        elif isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        return self.reduce(x)

    def div(self, a, b) -> int:
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a) -> int:
        return self.div(1, a)

    def random(self, rng: Random, bound: int | None = None) -> int:
        return rng.randrange(self.p)

    def fmt(self, x) -> str:
        return str(x)

    @property
    def name(self) -> str:
        return f"Fp {self.p}"


Field = Union[RationalField, PrimeField]

QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(int(p))


def parse_field(text: str) -> Field:
    """Parse ``q`` / ``Q`` or ``fp:<p>`` / ``Fp <p>``."""
    s = text.strip()
    if s.lower() in ("q", "qq"):
        return QQ
    for sep in (":", " "):
        head, _, tail = s.partition(sep)
        if head.lower() == "fp" and tail.strip():
            return GF(int(tail))
    raise ValueError(f"unknown field {text!r}")
