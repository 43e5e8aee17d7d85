"""The standard symplectic form, structured-matrix predicates and Sp(n) actions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import PreconditionError, ShapeError
from .fields import QQ, Field
from .linalg import DenseMatrix, determinant


def standard_J(n: int, field: Field = QQ) -> DenseMatrix:
    """[[0, I], [-I, 0]] of size n."""
    if n < 2 or n % 2:
        raise ShapeError(f"symplectic form needs even n >= 2, got {n}")
    h = n // 2
    minus = field(-1)
    rows = []
    for i in range(n):
        row = [0] * n
        if i < h:
            row[i + h] = 1
        else:
            row[i - h] = minus
        rows.append(tuple(row))
    return DenseMatrix._raw(field, tuple(rows), n)


def times_J(X: DenseMatrix) -> DenseMatrix:
    """X @ J without a multiplication: column j <- -X[:, j+h] (j < h), X[:, j-h] (j >= h)."""
    h = X.ncols // 2
    red = X.field.reduce
    return DenseMatrix._raw(
        X.field, tuple(tuple(red(-x) for x in r[h:]) + r[:h] for r in X.rows), X.ncols
    )


def J_times(X: DenseMatrix) -> DenseMatrix:
    """J @ X: rows become (X[h:], -X[:h])."""
    h = X.nrows // 2
    red = X.field.reduce
    return DenseMatrix._raw(
        X.field, X.rows[h:] + tuple(tuple(red(-x) for x in r) for r in X.rows[:h]), X.ncols
    )


def J_inv_times(X: DenseMatrix) -> DenseMatrix:
    """J^{-1} @ X = -J @ X."""
    return -J_times(X)


def _even_square(M: DenseMatrix):
    if not M.is_square() or M.nrows % 2 or M.nrows == 0:
        raise ShapeError(f"expected an even-size square matrix, got {M.shape}")


def is_skew_hamiltonian(W: DenseMatrix) -> bool:
    """J W == W^T J."""
    _even_square(W)
    return J_times(W) == times_J(W.T)


def is_hamiltonian(H: DenseMatrix) -> bool:
    """J H == -H^T J."""
    _even_square(H)
    return J_times(H) == -times_J(H.T)


def is_symplectic(M: DenseMatrix) -> bool:
    _even_square(M)
    return M.T @ J_times(M) == standard_J(M.nrows, M.field)


def symplectic_inverse(M: DenseMatrix) -> DenseMatrix:
    """M^{-1} = -J M^T J for M in Sp(n)."""
    return -J_times(times_J(M.T))


def _require_symplectic(M: DenseMatrix):
    if not is_symplectic(M):
        raise PreconditionError("matrix is not symplectic")


def conj_action(M: DenseMatrix, W: DenseMatrix) -> DenseMatrix:
    """M * W := M^{-1} W M."""
    _require_symplectic(M)
    return symplectic_inverse(M) @ W @ M


def congr_action(M: DenseMatrix, B: DenseMatrix) -> DenseMatrix:
    """M ⋆ B := M^T B M."""
    _require_symplectic(M)
    return M.T @ B @ M


def random_symmetric(n: int, rng: random.Random, field: Field = QQ, bound: int = 3) -> DenseMatrix:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = field(field.random(rng, bound))
    return DenseMatrix._raw(field, tuple(map(tuple, a)), n)


def random_skew(n: int, rng: random.Random, field: Field = QQ, bound: int = 5) -> DenseMatrix:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = field(field.random(rng, bound))
            a[i][j] = v
            a[j][i] = field.reduce(-v)
    return DenseMatrix._raw(field, tuple(map(tuple, a)), n)


def _random_invertible(h: int, rng: random.Random, field: Field) -> DenseMatrix:
    while True:
        U = DenseMatrix(([field.random(rng, 3) for _ in range(h)] for _ in range(h)), field)
        if determinant(U) != 0:
            return U


def random_symplectic(n: int, seed: int, field: Field = QQ) -> DenseMatrix:
    """Product of 3-10 random generators [[I,S],[0,I]], [[I,0],[T,I]], [[U,0],[0,U^-T]]."""
    if n < 2 or n % 2:
        raise ShapeError(f"need even n >= 2, got {n}")
    rng = random.Random(f"symplectic:{n}:{seed}:{field!r}")
    h = n // 2
    I = DenseMatrix.identity(h, field)
    Z = DenseMatrix.zeros(h, h, field)
    M = DenseMatrix.identity(n, field)
    for _ in range(rng.randint(3, 10)):
        kind = rng.randrange(3)
        if kind == 0:
            G = DenseMatrix.block([[I, random_symmetric(h, rng, field)], [Z, I]])
        elif kind == 1:
            G = DenseMatrix.block([[I, Z], [random_symmetric(h, rng, field), I]])
        else:
            U = _random_invertible(h, rng, field)
            G = DenseMatrix.block([[U, Z], [Z, U.inverse().T]])
        M = M @ G
    return M


@dataclass(frozen=True)
class Partition:
    """Ordered block sizes d_1, ..., d_m of a partition of n/2."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(d) for d in self.parts)
        if not parts or min(parts) < 1:
            raise ShapeError(f"partition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(tuple(int(x) for x in text.split(",") if x.strip()))

    @property
    def half(self) -> int:
        return sum(self.parts)

    @property
    def n(self) -> int:
        return 2 * self.half

    @property
    def offsets(self) -> tuple[int, ...]:
        """delta_i = d_1 + ... + d_{i-1}, with a trailing n/2."""
        out = [0]
        for d in self.parts:
            out.append(out[-1] + d)
        return tuple(out)

    def blocks(self) -> Iterator[tuple[int, int]]:
        """(start, size) of each diagonal block, zero-based."""
        offs = self.offsets
        for i, d in enumerate(self.parts):
            yield offs[i], d

    def check(self, n: int):
        if self.n != n:
            raise ShapeError(f"partition {self.parts} does not partition {n}/2")

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def partitions(k: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of k with non-increasing parts."""
    max_part = k if max_part is None else max_part

    def rec(rem, mx):
        if rem == 0:
            yield ()
            return
        for d in range(min(rem, mx), 0, -1):
            for tail in rec(rem - d, d):
                yield (d,) + tail

    for p in rec(k, max_part):
        yield Partition(p)


def jordan_block(d: int, eigenvalue, field: Field = QQ) -> DenseMatrix:
    """Upper-triangular Jordan block J_d(eigenvalue)."""
    lam = field(eigenvalue)
    return DenseMatrix._raw(
        field,
        tuple(tuple(lam if i == j else (1 if j == i + 1 else 0) for j in range(d)) for i in range(d)),
        d,
    )


def normal_form_skewham(
    d: Partition, eigenvalues: Sequence, field: Field = QQ
) -> tuple[DenseMatrix, DenseMatrix]:
    """W = diag(P, P^T) with P = ⊕ J_{d_i}(λ_i), and B = J^{-1} W = [[0, -P^T], [P, 0]]."""
    if len(eigenvalues) != len(d.parts):
        raise ShapeError("one eigenvalue per Jordan block is required")
    P = DenseMatrix.block_diag(*(jordan_block(di, lam, field) for di, lam in zip(d.parts, eigenvalues)))
    W = DenseMatrix.block_diag(P, P.T)
    Z = DenseMatrix.zeros(d.half, d.half, field)
    B = DenseMatrix.block([[Z, -P.T], [P, Z]])
    return W, B
