from fractions import Fraction

import pytest

from skewham.errors import UnsupportedField
from skewham.fields import GF, QQ, parse_field


def test_rational_normalizes_integral_fractions():
    assert QQ(Fraction(4, 2)) == 2
    assert type(QQ(Fraction(4, 2))) is int
    assert QQ("3/6") == Fraction(1, 2)


def test_rational_rejects_bool():
    with pytest.raises(TypeError):
        QQ(True)


def test_prime_field_reduces_fractions():
    F = GF(7)
    assert F(Fraction(1, 2)) == 4
    assert F(-1) == 6
    assert F.div(3, 5) * 5 % 7 == 3


@pytest.mark.parametrize("p", [2, 4, 9, 1, 0, -3])
def test_prime_field_needs_odd_prime(p):
    with pytest.raises((UnsupportedField, ValueError)):
        GF(p)


@pytest.mark.parametrize(
    "text,expected",
    [("q", QQ), ("Q", QQ), ("fp:101", GF(101)), ("Fp 7", GF(7))],
)
def test_parse_field(text, expected):
    assert parse_field(text) == expected


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QQ.div(1, 0)
    with pytest.raises(ZeroDivisionError):
        GF(5).div(1, 0)
