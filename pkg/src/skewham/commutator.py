"""The commutator map phi(A, B) = AJB - BJA and its linear-algebraic companions.

Coordinates: a skew matrix is written in the basis E_ij - E_ji (i < j,
lexicographic); a symmetric matrix in the basis E_ii (i ascending) followed by
E_ij + E_ji (i < j, lexicographic).
"""

from __future__ import annotations

import random
from math import comb
from typing import Sequence

from .errors import DomainError, PreconditionError, SearchExhausted, ShapeError
from .fields import QQ, Field
from .linalg import DenseMatrix, kernel_basis, minimal_polynomial, rank
from .symplectic import J_inv_times, J_times, is_skew_hamiltonian, random_skew, times_J


# -- coordinates ------------------------------------------------------------

def skew_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def sym_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, i) for i in range(n)] + skew_pairs(n)


def skew_coords(A: DenseMatrix) -> tuple:
    return tuple(A.rows[i][j] for i, j in skew_pairs(A.nrows))


def sym_coords(S: DenseMatrix) -> tuple:
    return tuple(S.rows[i][j] for i, j in sym_pairs(S.nrows))


def skew_from_coords(c: Sequence, n: int, field: Field = QQ) -> DenseMatrix:
    a = [[0] * n for _ in range(n)]
    for (i, j), x in zip(skew_pairs(n), c):
        x = field(x)
        a[i][j] = x
        a[j][i] = field.reduce(-x)
    return DenseMatrix._raw(field, tuple(map(tuple, a)), n)


def sym_from_coords(c: Sequence, n: int, field: Field = QQ) -> DenseMatrix:
    a = [[0] * n for _ in range(n)]
    for (i, j), x in zip(sym_pairs(n), c):
        a[i][j] = a[j][i] = field(x)
    return DenseMatrix._raw(field, tuple(map(tuple, a)), n)


def skew_basis(n: int, field: Field = QQ) -> list[DenseMatrix]:
    m = comb(n, 2)
    return [skew_from_coords([int(k == t) for k in range(m)], n, field) for t in range(m)]


# -- the map ------------------------------------------------------------------

def _check_pair(A: DenseMatrix, B: DenseMatrix):
    if A.shape != B.shape or not A.is_square() or A.nrows % 2:
        raise ShapeError(f"need two skew matrices of equal even size, got {A.shape}, {B.shape}")


def phi(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    """AJB - BJA, computed as X + X^T with X = AJB (since (AJB)^T = -BJA)."""
    _check_pair(A, B)
    if not (A.is_skew() and B.is_skew()):
        raise ShapeError("phi is defined on skew-symmetric matrices")
    X = times_J(A) @ B
    return X + X.T


def commutator(X: DenseMatrix, Y: DenseMatrix) -> DenseMatrix:
    return X @ Y - Y @ X


def phiB_matrix(B: DenseMatrix) -> DenseMatrix:
    """Matrix of A -> phi(A, B) from skew to symmetric coordinates, C(n+1,2) x C(n,2)."""
    n = B.nrows
    if not B.is_square() or n % 2 or not B.is_skew():
        raise ShapeError("phiB_matrix needs an even-size skew matrix")
    F = B.field
    JB = J_times(B).rows
    spairs = sym_pairs(n)
    cols = []
    for i, j in skew_pairs(n):
        # X = (e_i e_j^T - e_j e_i^T) J B has rows i: (JB)_j, j: -(JB)_i
        Xi, Xj = JB[j], JB[i]

        def x(r, c):
            if r == i:
                return Xi[c]
            if r == j:
                return -Xj[c]
            return 0

        cols.append(tuple(F.reduce(x(r, c) + x(c, r)) for r, c in spairs))
    return DenseMatrix._raw(F, tuple(zip(*cols)), len(cols))


def centralizer_dim(B: DenseMatrix) -> int:
    """dim {A skew : [JA, JB] = 0}."""
    return comb(B.nrows, 2) - rank(phiB_matrix(B))


def is_regular(W: DenseMatrix) -> bool:
    if not is_skew_hamiltonian(W):
        raise PreconditionError("is_regular expects a skew-Hamiltonian matrix")
    return minimal_polynomial(W).degree == W.nrows // 2


def centralizer_basis(B: DenseMatrix) -> list[DenseMatrix]:
    """J^{-1}(JB)^k for k < n/2; a basis of the kernel of phi^B when JB is regular."""
    W = J_times(B)
    if not is_regular(W):
        raise PreconditionError("JB is not regular")
    out = []
    P = DenseMatrix.identity(B.nrows, B.field)
    for _ in range(B.nrows // 2):
        out.append(J_inv_times(P))
        P = P @ W
    return out


def differential(A, B, dA, dB) -> DenseMatrix:
    """dA J B - B J dA + A J dB - dB J A."""
    return phi(dA, B) + phi(A, dB)


def jacobian_matrix(A: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    """Matrix of the differential at (A, B): columns dA-directions then dB-directions."""
    _check_pair(A, B)
    # phi(A, E) = -phi(E, A)
    left = phiB_matrix(B)
    right = -phiB_matrix(A)
    return DenseMatrix._raw(
        A.field, tuple(a + b for a, b in zip(left.rows, right.rows)), left.ncols + right.ncols
    )


def local_codim_certificate(A: DenseMatrix, B: DenseMatrix, r: int) -> bool:
    """Check that the rank-r locus has codimension C(n-r+1, 2) near (A, B).

    The normal directions are the entries k_i^T dS k_j (i <= j) for a basis
    k of ker S; the locus is locally a complete intersection of the expected
    codimension iff these functionals on tangent directions are independent.
    """
    S = phi(A, B)
    n = A.nrows
    if rank(S) != r:
        raise PreconditionError(f"rank(phi(A, B)) = {rank(S)} != {r}")
    if r == n:
        return True
    F = A.field
    K = kernel_basis(S)
    pairs = [(a, b) for a in range(len(K)) for b in range(a, len(K))]
    Jac = jacobian_matrix(A, B)
    rows = []
    for col in zip(*Jac.rows):
        D = sym_from_coords(col, n, F)
        DK = [D @ k for k in K]
        rows.append(
            tuple(F.reduce(sum(x * y for x, y in zip(K[a], DK[b]))) for a, b in pairs)
        )
    cert = DenseMatrix._raw(F, tuple(rows), len(pairs))
    return rank(cert) == len(pairs)


# -- rank-constrained samples ---------------------------------------------------

def find_rank_pair(
    n: int,
    r: int,
    seed: int,
    field: Field = QQ,
    max_tries: int = 10_000,
    bound: int = 5,
) -> tuple[DenseMatrix, DenseMatrix]:
    """Rejection sampling of (A, B) with rank phi(A, B) = r exactly."""
    rng = random.Random(f"rankpair:{n}:{r}:{seed}:{field!r}")
    for _ in range(max_tries):
        A = random_skew(n, rng, field, bound)
        B = random_skew(n, rng, field, bound)
        if rank(phi(A, B)) == r:
            return A, B
    raise SearchExhausted(f"no pair of rank {r} in {max_tries} tries (n={n}, {field!r})")


def construct_rank_pair(
    n: int,
    r: int,
    seed: int,
    field: Field = QQ,
    max_tries: int = 100,
    bound: int = 5,
) -> tuple[DenseMatrix, DenseMatrix]:
    """(A, B) with rank phi(A, B) = r, built by forcing a kernel of dimension n - r.

    B and an n x (n-r) matrix K are random; A is a random element of the linear
    space {A : phi(A, B) K = 0}.  Over QQ, where exact rank drops are too rare
    for rejection, this reaches generic points of the rank-r locus.
    """
    if not 0 <= r <= n:
        raise DomainError(f"rank {r} out of range for n={n}")
    rng = random.Random(f"rankpair-construct:{n}:{r}:{seed}:{field!r}")
    m = comb(n, 2)
    for _ in range(max_tries):
        B = random_skew(n, rng, field, bound)
        K = [tuple(field(field.random(rng, bound)) for _ in range(n)) for _ in range(n - r)]
        # column t: phi(E_t, B) k stacked over the kernel vectors k
        images = [sym_from_coords(col, n, field) for col in zip(*phiB_matrix(B).rows)]
        cols = [tuple(x for k in K for x in img @ k) for img in images]
        if K:
            sol = kernel_basis(DenseMatrix._raw(field, tuple(zip(*cols)), m))
        else:
            sol = [tuple(int(i == t) for i in range(m)) for t in range(m)]
        if not sol:
            continue
        coeffs = [field.random(rng, bound) for _ in sol]
        a = [field.reduce(sum(c * v[t] for c, v in zip(coeffs, sol))) for t in range(m)]
        A = skew_from_coords(a, n, field)
        if rank(phi(A, B)) == r:
            return A, B
    raise SearchExhausted(f"could not construct a rank-{r} pair for n={n}")



# -- closure argument ---------------------------------------------------------

def regularizing_perturbation(
    A: DenseMatrix, B: DenseMatrix, trials: int = 200, seed: int = 0
) -> DenseMatrix:
    """A skew B' with JB' regular and [JA, JB'] = 0.

    Then [JA, JB + t JB'] = [JA, JB] for every t, and JB + t JB' is regular for
    all but finitely many t.
    """
    _check_pair(A, B)
    F = A.field
    n = A.nrows
    JA = J_times(A)
    if is_regular(JA):
        Bp = A
    else:
        basis = kernel_basis(phiB_matrix(A))
        rng = random.Random(f"regularize:{n}:{seed}:{F!r}")
        Bp = None
        for _ in range(trials):
            c = [F.random(rng, 3) for _ in basis]
            coords = [F.reduce(sum(ci * v[t] for ci, v in zip(c, basis))) for t in range(comb(n, 2))]
            cand = skew_from_coords(coords, n, F)
            if is_regular(J_times(cand)):
                Bp = cand
                break
        if Bp is None:
            raise SearchExhausted(f"no regular commuting element in {trials} trials")
    JBp = J_times(Bp)
    if not commutator(JA, JBp).is_zero():
        raise AssertionError("perturbation does not commute with JA")
    return Bp


# -- dimension count ----------------------------------------------------------

def moduli_dimension(r: int, n: int) -> int:
    """(r-2) n - C(r, 2), cross-checked against the fibration count."""
    if not 2 <= r <= n:
        raise DomainError(f"need 2 <= r <= n, got r={r}, n={n}")
    value = (r - 2) * n - comb(r, 2)
    fibration = comb(n, 2) + (2 * comb(n, 2) - comb(n - r + 1, 2)) - n * n
    if fibration != value:
        raise AssertionError(f"dimension count mismatch: {fibration} != {value}")
    return value
