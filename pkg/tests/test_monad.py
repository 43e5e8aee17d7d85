import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import pfaffian_matching
from strategies import skew
from skewham.commutator import construct_rank_pair, phi
from skewham.errors import DomainError, PreconditionError, ShapeError
from skewham.fields import GF
from skewham.linalg import DenseMatrix, determinant, pfaffian, rank
from skewham.monad import (
    MONOMIALS,
    PencilTensor,
    build_resolution,
    determinant_form,
    discriminant,
    h0f_matrix,
    is_jumping_line,
    pencil_eval,
    pencil_with_jumping_line,
    random_pencil,
    rank_h0f,
    splitting_h0,
    z_matrix,
)
from skewham.poly import HomPoly3
from skewham.symplectic import random_skew, standard_J


@st.composite
def pencils(draw, sizes=(2, 4, 6)):
    n = draw(st.sampled_from(sizes))
    return PencilTensor(draw(skew(n)), draw(skew(n)), draw(skew(n)))


def test_pencil_validation():
    with pytest.raises(ShapeError):
        PencilTensor(standard_J(4), DenseMatrix.identity(4), standard_J(4))
    with pytest.raises(ShapeError):
        PencilTensor(standard_J(4), standard_J(2), standard_J(4))


def test_h0f_zero_and_ranks():
    Z = DenseMatrix.zeros(4)
    assert h0f_matrix(PencilTensor(Z, Z, Z)).is_zero()
    rng = random.Random(0)
    A = random_skew(4, rng)
    assert rank_h0f(PencilTensor(A, standard_J(4), A)) == 8


@settings(max_examples=30)
@given(pencils())
def test_h0f_symmetric_and_rank_law(f):
    H = h0f_matrix(f)
    assert H.is_symmetric()
    if determinant(f.Q) != 0:
        Z = z_matrix(f)
        assert Z.is_symmetric()
        assert rank_h0f(f) == 2 * f.n + rank(Z)


def test_z_matrix_with_J():
    rng = random.Random(1)
    A, B = random_skew(4, rng), random_skew(4, rng)
    f = PencilTensor(A, standard_J(4), B)
    assert z_matrix(f) == -phi(A, B)
    assert z_matrix(PencilTensor(A, standard_J(4), A)).is_zero()
    with pytest.raises(PreconditionError):
        z_matrix(PencilTensor(A, DenseMatrix.zeros(4), B))


@pytest.mark.parametrize("n,r", [(6, 5), (6, 4), (8, 7)])
def test_rank_h0f_tracks_phi_rank(n, r):
    A, B = construct_rank_pair(n, r, seed=0)
    assert rank_h0f(PencilTensor(A, standard_J(n), B)) == 2 * n + r


def test_pencil_eval():
    f = random_pencil(4, 0)
    assert pencil_eval(f, (1, 0, 0)) == f.P
    assert pencil_eval(f, (0, 1, 0)) == f.Q
    assert pencil_eval(f, (2, 3, -1)) == pencil_eval(f, (1, 0, 0)).scale(2) + pencil_eval(f, (0, 3, -1))


def test_discriminant_examples():
    Z = DenseMatrix.zeros(2)
    assert discriminant(PencilTensor(Z, standard_J(2), Z)) == HomPoly3(1, {(0, 1, 0): 1})
    rng = random.Random(2)
    f = PencilTensor(random_skew(4, rng), standard_J(4), random_skew(4, rng))
    D = discriminant(f)
    assert D.degree == 2
    assert D((0, 1, 0)) == -1


@settings(max_examples=15)
@given(pencils(), st.lists(st.tuples(*[st.integers(-5, 5)] * 3), min_size=3, max_size=6))
def test_discriminant_is_pfaffian(f, pts):
    D = discriminant(f)
    for z in pts:
        assert D(z) == pfaffian_matching(pencil_eval(f, z).tolist())


@pytest.mark.parametrize("n", [2, 4, 6])
def test_discriminant_squared_is_determinant(n):
    f = random_pencil(n, 3)
    assert discriminant(f) * discriminant(f) == determinant_form(f)


def test_discriminant_mod_p():
    f = random_pencil(4, 4, GF(101))
    D = discriminant(f)
    assert D.field == GF(101)
    assert D((1, 2, 3)) == pfaffian(pencil_eval(f, (1, 2, 3)))


@pytest.mark.parametrize("n", [2, 4, 6])
def test_jumping_lines(n):
    z = (2, -1, 3)
    f = pencil_with_jumping_line(n, z, seed=0)
    assert is_jumping_line(f, z)
    assert discriminant(f)(z) == 0
    h = splitting_h0(f, z)
    assert h > 0 and h % 2 == 0
    A = random_skew(n, random.Random(n))
    g = PencilTensor(A, standard_J(n), A)
    assert is_jumping_line(g, (1, 0, -1))
    assert splitting_h0(g, (1, 0, -1)) == n
    assert not is_jumping_line(g, (0, 1, 0))
    assert splitting_h0(g, (0, 1, 0)) == 0


def test_zero_point_rejected():
    f = random_pencil(4, 0)
    with pytest.raises(DomainError):
        is_jumping_line(f, (0, 0, 0))
    with pytest.raises(DomainError):
        splitting_h0(f, (0, 0, 0))


@pytest.mark.parametrize("n,seed", [(4, 1), (4, 2), (6, 3)])
def test_resolution(n, seed):
    f = random_pencil(n, seed)
    assert rank_h0f(f) == 3 * n
    res = build_resolution(f)
    coeffs = res.product_coefficients()
    assert set(coeffs) == set(MONOMIALS)
    assert all(C.is_zero() for C in coeffs.values())
    assert rank(res.alpha_at((1, 0, 0))) == n
    assert res.alpha[0].shape == (3 * n, n) and res.beta[0].shape == (n, 3 * n)
    x = (3, -2, 5)
    assert (res.beta_at(x) @ res.alpha_at(x)).is_zero()


def test_n2_pencils_have_rank_2n():
    # phi vanishes for n = 2, so r = 0
    for seed in range(5):
        assert rank_h0f(random_pencil(2, seed)) == 4


def test_resolution_of_a_commutator_pencil():
    A, B = construct_rank_pair(4, 4, seed=5)
    res = build_resolution(PencilTensor(A, standard_J(4), B))
    assert res.n == 4


def test_resolution_needs_full_rank():
    A = random_skew(4, random.Random(6))
    with pytest.raises(PreconditionError):
        build_resolution(PencilTensor(A, standard_J(4), A))


def test_resolution_mod_p():
    f = random_pencil(4, 7, GF(101))
    if rank_h0f(f) == 12:
        res = build_resolution(f)
        assert all(C.is_zero() for C in res.product_coefficients().values())
