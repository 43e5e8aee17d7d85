import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import det_cofactor
from strategies import symmetric
from skewham.commutator import phi
from skewham.errors import ShapeError
from skewham.fields import GF, QQ
from skewham.image import (
    GammaCoefficients,
    check_n2_vanishing,
    gamma_coefficients,
    jacobian_rank,
    n4_scalar_square,
    n6_image_equation,
    n6_quartic,
)
from skewham.linalg import DenseMatrix
from skewham.symplectic import random_skew, standard_J

E12 = DenseMatrix([[0, 1], [-1, 0]])
I6 = DenseMatrix.identity(6)


def test_n2_vanishes():
    assert phi(E12, E12).is_zero()
    assert phi(E12, E12.scale(2)).is_zero()
    assert check_n2_vanishing(100, seed=0)
    assert check_n2_vanishing(100, seed=0, field=GF(101))


def test_n4_law_on_images_and_zero():
    rng = random.Random(0)
    for _ in range(50):
        ok, lam = n4_scalar_square(phi(random_skew(4, rng), random_skew(4, rng)))
        assert ok and lam is not None
    assert n4_scalar_square(DenseMatrix.zeros(4)) == (True, 0)


def test_n4_law_fails_on_a_symmetric_matrix():
    S = DenseMatrix([[1, 2, 0, 0], [2, 3, 1, 0], [0, 1, 0, 4], [0, 0, 4, 5]])
    assert n4_scalar_square(S) == (False, None)
    with pytest.raises(ShapeError):
        n4_scalar_square(I6)


def test_gamma_of_zero_and_identity():
    assert gamma_coefficients(DenseMatrix.zeros(6)) == GammaCoefficients(0, 0, 0)
    assert gamma_coefficients(I6) == GammaCoefficients(3, 3, 1)
    assert n6_quartic(I6) == 21
    assert n6_image_equation(I6) == -3
    assert n6_quartic(DenseMatrix.zeros(6)) == 0


@settings(max_examples=25)
@given(symmetric(6), st.integers(4, 9))
def test_gamma_reconstructs_characteristic_polynomial(S, t):
    g = gamma_coefficients(S)
    shifted = (S - standard_J(6).scale(t)).tolist()
    assert g(t) == det_cofactor(shifted)
    assert g(-t) == g(t)


@pytest.mark.parametrize("F", [QQ, GF(101)])
def test_image_quartic_vanishes_on_images(F):
    rng = random.Random(1)
    for _ in range(40):
        S = phi(random_skew(6, rng, F), random_skew(6, rng, F))
        assert n6_image_equation(S) == 0


def test_plus_sign_quartic_does_not_vanish_on_images():
    # gamma4^2 + 4 gamma2 = 2 gamma4^2 on the image, generically nonzero
    rng = random.Random(2)
    S = phi(random_skew(6, rng), random_skew(6, rng))
    g = gamma_coefficients(S)
    assert n6_quartic(S) == 2 * g.gamma4**2 != 0


def test_gamma_needs_large_characteristic():
    with pytest.raises(ValueError):
        gamma_coefficients(DenseMatrix.identity(6, GF(7)))


@pytest.mark.parametrize("n,expected", [(4, 7), (6, 20), (8, 36), (10, 55)])
def test_jacobian_rank(n, expected):
    rng = random.Random(n)
    assert jacobian_rank(random_skew(n, rng), random_skew(n, rng)) == expected


def test_jacobian_rank_shape_error():
    with pytest.raises(ShapeError):
        jacobian_rank(random_skew(4, random.Random(0)), random_skew(6, random.Random(0)))
