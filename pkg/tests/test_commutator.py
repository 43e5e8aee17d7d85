import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from strategies import skew, skew_pair
from skewham import commutator as cm
from skewham.errors import DomainError, PreconditionError, ShapeError
from skewham.fields import GF
from skewham.linalg import DenseMatrix, rank
from skewham.symplectic import J_times, Partition, normal_form_skewham, random_skew, standard_J


@given(skew_pair(sizes=(2, 4, 6)))
def test_phi_symmetric_and_bracket(pair):
    A, B = pair
    S = cm.phi(A, B)
    J = standard_J(A.nrows)
    assert S.is_symmetric()
    assert S == A @ J @ B - B @ J @ A
    assert S == -J_times(cm.commutator(J_times(A), J_times(B)))
    assert cm.phi(B, A) == -S


@given(skew_pair(sizes=(4, 6)))
def test_phiB_matrix_is_phi_in_coordinates(pair):
    A, B = pair
    M = cm.phiB_matrix(B)
    n = B.nrows
    assert M.shape == (comb(n + 1, 2), comb(n, 2))
    assert M @ cm.skew_coords(A) == cm.sym_coords(cm.phi(A, B))


@given(skew_pair(sizes=(4, 6)), st.data())
def test_differential_is_bilinear_derivative(pair, data):
    A, B = pair
    n = A.nrows
    dA, dB = data.draw(skew(n)), data.draw(skew(n))
    t = 3
    lhs = cm.phi(A + dA.scale(t), B + dB.scale(t)) - cm.phi(A, B)
    rhs = cm.differential(A, B, dA, dB).scale(t) + cm.phi(dA, dB).scale(t * t)
    assert lhs == rhs
    coords = cm.skew_coords(dA) + cm.skew_coords(dB)
    assert cm.jacobian_matrix(A, B) @ coords == cm.sym_coords(cm.differential(A, B, dA, dB))


def test_coordinate_round_trip():
    rng = random.Random(0)
    A = random_skew(6, rng)
    assert cm.skew_from_coords(cm.skew_coords(A), 6) == A
    S = cm.phi(A, random_skew(6, rng))
    assert cm.sym_from_coords(cm.sym_coords(S), 6) == S


def test_phi_rejects_non_skew():
    with pytest.raises(ShapeError):
        cm.phi(DenseMatrix.identity(4), standard_J(4))


@pytest.mark.parametrize("parts", [(2,), (1, 1), (3,), (2, 1), (1, 1, 1), (2, 2), (4,)])
def test_centralizer_of_regular_normal_forms(parts):
    d = Partition(parts)
    W, B = normal_form_skewham(d, list(range(1, len(parts) + 1)))
    assert cm.is_regular(W)
    assert cm.centralizer_dim(B) == d.half
    basis = cm.centralizer_basis(B)
    M = cm.phiB_matrix(B)
    assert all(not any(M @ cm.skew_coords(A)) for A in basis)


def test_non_regular_has_bigger_centralizer():
    # two blocks with the same eigenvalue
    W, B = normal_form_skewham(Partition((1, 1)), [2, 2])
    assert not cm.is_regular(W)
    assert cm.centralizer_dim(B) > 2
    with pytest.raises(PreconditionError):
        cm.centralizer_basis(B)


@pytest.mark.parametrize("n,expected", [(4, 7), (6, 20), (8, 36)])
def test_jacobian_ranks(n, expected):
    rng = random.Random(n)
    for _ in range(5):
        assert rank(cm.jacobian_matrix(random_skew(n, rng), random_skew(n, rng))) == expected


@pytest.mark.parametrize("n,r", [(6, 5), (6, 4), (8, 7), (8, 6)])
def test_constructed_pairs_are_certified(n, r):
    A, B = cm.construct_rank_pair(n, r, seed=1)
    assert rank(cm.phi(A, B)) == r
    assert cm.local_codim_certificate(A, B, r)


def test_rejection_pairs_over_Fp():
    F = GF(101)
    A, B = cm.find_rank_pair(6, 5, seed=2, field=F)
    assert rank(cm.phi(A, B)) == 5
    assert cm.local_codim_certificate(A, B, 5)


def test_certificate_needs_exact_rank():
    rng = random.Random(3)
    A, B = random_skew(6, rng), random_skew(6, rng)
    with pytest.raises(PreconditionError):
        cm.local_codim_certificate(A, B, 5)


@pytest.mark.parametrize("n,r", [(6, 5), (6, 4), (8, 7)])
def test_regularizing_perturbation(n, r):
    A, B = cm.construct_rank_pair(n, r, seed=4)
    Bp = cm.regularizing_perturbation(A, B)
    assert cm.is_regular(J_times(Bp))
    assert cm.phi(A, Bp).is_zero()
    # the family B + t B' has the same image and is regular for t = 1, 2 or 3
    assert any(cm.is_regular(J_times(B + Bp.scale(t))) for t in (1, 2, 3))
    assert all(cm.phi(A, B + Bp.scale(t)) == cm.phi(A, B) for t in (1, 2))


def test_moduli_dimension():
    assert cm.moduli_dimension(4, 6) == 6
    assert cm.moduli_dimension(2, 2) == -1
    for n in range(2, 13):
        for r in range(2, n + 1):
            assert cm.moduli_dimension(r, n) == (r - 2) * n - comb(r, 2)
    with pytest.raises(DomainError):
        cm.moduli_dimension(1, 4)
    with pytest.raises(DomainError):
        cm.moduli_dimension(5, 4)
