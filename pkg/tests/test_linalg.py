from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import charpoly_by_interpolation, det_cofactor, pfaffian_matching, rank_mod, sympy_rank
from strategies import skew, square, symmetric
from skewham.errors import ShapeError
from skewham.fields import GF
from skewham.linalg import (
    DenseMatrix,
    congruence_diagonalize,
    determinant,
    kernel_basis,
    minimal_polynomial,
    pfaffian,
    rank,
)
from skewham.symplectic import standard_J


def test_small_examples():
    assert rank(DenseMatrix([[1, 2], [2, 4]])) == 1
    assert determinant(standard_J(4)) == 1
    assert pfaffian(standard_J(2)) == 1
    assert pfaffian(standard_J(4)) == -1
    assert kernel_basis(DenseMatrix([[1, 1], [1, 1]])) == [(-1, 1)]
    assert determinant(DenseMatrix([[Fraction(1, 2), 1], [3, 4]])) == -1


def test_minimal_polynomial_of_repeated_eigenvalue():
    assert minimal_polynomial(DenseMatrix.diag([1, 2, 2])).coeffs == (2, -3, 1)


def test_congruence_of_hyperbolic_plane():
    S = DenseMatrix([[0, 1], [1, 0]])
    M, D = congruence_diagonalize(S)
    assert D == DenseMatrix.diag([2, Fraction(-1, 2)])
    assert M.T @ D @ M == S


def test_shape_errors():
    with pytest.raises(ShapeError):
        determinant(DenseMatrix([[1, 2, 3]]))
    with pytest.raises(ShapeError):
        pfaffian(DenseMatrix([[1, 0], [0, 1]]))
    with pytest.raises(ShapeError):
        DenseMatrix([[1, 2], [3]])


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        DenseMatrix([[1, 2], [2, 4]]).inverse()


@given(square())
def test_determinant_matches_cofactor(a):
    assert determinant(DenseMatrix(a)) == det_cofactor(a)


@given(square(), st.sampled_from([5, 7, 101]))
def test_determinant_mod_p(a, p):
    assert determinant(DenseMatrix(a, GF(p))) == det_cofactor(a) % p


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rank_matches_sympy(m, n, data):
    a = [[data.draw(st.integers(-3, 3)) for _ in range(n)] for _ in range(m)]
    # force some dependence
    if m > 1:
        a[-1] = [x + y for x, y in zip(a[0], a[-1 % m])]
    assert rank(DenseMatrix(a)) == sympy_rank(a)
    assert rank(DenseMatrix(a, GF(7))) == rank_mod(a, 7)


@given(skew(sizes=(2, 4, 6)))
def test_pfaffian_matches_matching_sum(A):
    assert pfaffian(A) == pfaffian_matching(A.tolist())


@given(skew(sizes=(2, 4, 6)))
def test_pfaffian_squared_is_determinant(A):
    assert pfaffian(A) ** 2 == determinant(A)


@given(skew(sizes=(2, 4), field=GF(101)))
def test_pfaffian_mod_p(A):
    assert pfaffian(A) == pfaffian_matching(A.tolist()) % 101


@given(square(lo=1, hi=4))
def test_minimal_polynomial_divides_charpoly(a):
    M = DenseMatrix(a)
    mp = minimal_polynomial(M)
    assert mp.coeffs[-1] == 1
    assert mp.at_matrix(M).is_zero()
    from skewham.poly import Poly1

    cp = Poly1(tuple(charpoly_by_interpolation(a)))
    assert cp.divmod(mp)[1].is_zero()


@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_kernel_basis(m, n, data):
    a = [[data.draw(st.integers(-2, 2)) for _ in range(n)] for _ in range(m)]
    M = DenseMatrix(a)
    K = kernel_basis(M)
    assert len(K) == n - rank(M)
    assert all(not any(M @ k) for k in K)
    if K:
        assert rank(DenseMatrix(K)) == len(K)


@given(symmetric(sizes=(1, 2, 3, 4, 6)))
def test_congruence_diagonalization(S):
    M, D = congruence_diagonalize(S)
    assert all(D[i, j] == 0 for i in range(D.nrows) for j in range(D.ncols) if i != j)
    assert M.T @ D @ M == S
    assert determinant(M) != 0


@given(symmetric(sizes=(2, 4), field=GF(7)))
def test_congruence_diagonalization_mod_p(S):
    M, D = congruence_diagonalize(S)
    assert M.T @ D @ M == S


@given(square(lo=1, hi=4))
def test_inverse(a):
    M = DenseMatrix(a)
    if determinant(M) != 0:
        assert M @ M.inverse() == DenseMatrix.identity(M.nrows)
