"""Traces along (anti)diagonals, diamond matrices and the bad-line test."""

from __future__ import annotations

from typing import Iterator

from .commutator import sym_pairs
from .errors import DomainError, ShapeError
from .fields import QQ
from .linalg import DenseMatrix, rank
from .symplectic import Partition

WHICH = ("supertraceless", "subtraceless", "superantitraceless", "subantitraceless")


def _trace_cells(d: int, k: int) -> list[tuple[int, int]]:
    """Zero-based cells of the k-th diagonal of a d x d matrix."""
    if not -d < k < d:
        raise DomainError(f"need -{d} < k < {d}, got {k}")
    if k >= 0:
        return [(i, i + k) for i in range(d - k)]
    return [(j - k, j) for j in range(d + k)]


def _antitrace_cells(d: int, k: int) -> list[tuple[int, int]]:
    """Zero-based cells with (i+1) + (j+1) = d + 1 - k."""
    if not -d < k < d:
        raise DomainError(f"need -{d} < k < {d}, got {k}")
    s = d - 1 - k
    return [(i, s - i) for i in range(d) if 0 <= s - i < d]


def kth_trace(M: DenseMatrix, k: int):
    if not M.is_square():
        raise ShapeError("k-th trace needs a square matrix")
    return M.field.reduce(sum(M.rows[i][j] for i, j in _trace_cells(M.nrows, k)))


def kth_antitrace(M: DenseMatrix, k: int):
    if not M.is_square():
        raise ShapeError("k-th antitrace needs a square matrix")
    return M.field.reduce(sum(M.rows[i][j] for i, j in _antitrace_cells(M.nrows, k)))


def _ks(d: int, which: str) -> range:
    return range(0, d) if which.startswith("super") else range(-d + 1, 1)


def _cells(d: int, which: str) -> Iterator[list[tuple[int, int]]]:
    if which not in WHICH:
        raise ValueError(f"unknown predicate {which!r}")
    cells = _antitrace_cells if "anti" in which else _trace_cells
    for k in _ks(d, which):
        yield cells(d, k)


def tracelessness(M: DenseMatrix, which: str) -> bool:
    """One of supertraceless / subtraceless / superantitraceless / subantitraceless."""
    if not M.is_square():
        raise ShapeError("tracelessness needs a square matrix")
    red = M.field.reduce
    return all(red(sum(M.rows[i][j] for i, j in c)) == 0 for c in _cells(M.nrows, which))


# quadrant -> (row offset, col offset) in units of n/2, and the rule on its diagonal blocks


QUADRANT_RULES = (
    ("Y1", 0, 0, "superantitraceless"),
    ("Y2", 0, 1, "supertraceless"),
    ("Y3", 1, 1, "subantitraceless"),
    ("Y4", 1, 0, "subtraceless"),
)


def _diamond_cells(d: Partition, quadrants=QUADRANT_RULES) -> Iterator[list[tuple[int, int]]]:
    h = d.half
    for _, qr, qc, which in quadrants:
        for start, size in d.blocks():
            r0, c0 = qr * h + start, qc * h + start
            for cells in _cells(size, which):
                yield [(r0 + i, c0 + j) for i, j in cells]


def is_diamond(Y: DenseMatrix, d: Partition) -> bool:
    if not Y.is_square():
        raise ShapeError("diamond test needs a square matrix")
    d.check(Y.nrows)
    red = Y.field.reduce
    return all(red(sum(Y.rows[i][j] for i, j in c)) == 0 for c in _diamond_cells(d))


def diamond_conditions(d: Partition, symmetric: bool = True) -> list[tuple[int, ...]]:
    """The diamond functionals as coefficient vectors.

    symmetric=True: on the C(n+1,2) symmetric coordinates, Y4 omitted (it is the
    transpose of Y2), 3n/2 functionals.  symmetric=False: on all n^2 entries in
    row-major order, 2n functionals.
    """
    n = d.n
    if symmetric:
        index = {p: t for t, p in enumerate(sym_pairs(n))}
        dim = len(index)
        quads = QUADRANT_RULES[:3]
    else:
        index = {(i, j): i * n + j for i in range(n) for j in range(n)}
        dim = n * n
        quads = QUADRANT_RULES
    out = []
    for cells in _diamond_cells(d, quads):
        v = [0] * dim
        for i, j in cells:
            v[index[(min(i, j), max(i, j)) if symmetric else (i, j)]] += 1
        out.append(tuple(v))
    return out


def kernel_conditions(L, n: int) -> list[tuple]:
    """The n functionals S -> (S l)_j = sum_k l_k s_kj on symmetric coordinates."""
    index = {p: t for t, p in enumerate(sym_pairs(n))}
    out = []
    for j in range(n):
        v = [0] * len(index)
        for k in range(n):
            if L[k] != 0:
                v[index[(min(k, j), max(k, j))]] += L[k]
        out.append(tuple(v))
    return out


def bad_block(d: Partition, L) -> int | None:
    """Index i with L inside <e_{delta_i + 1}, e_{delta_{i+1} + n/2}>, or None."""
    h = d.half
    support = {k for k, x in enumerate(L) if x != 0}
    offs = d.offsets
    for i in range(len(d.parts)):
        if support <= {offs[i], offs[i + 1] - 1 + h}:
            return i
    return None


def in_bad_union(d: Partition, L) -> bool:
    return bad_block(d, L) is not None


def expected_badline_drop(d: Partition, L) -> int:
    """The predicted overlap: 0 off the bad union, else 2 for a 1x1 block and 3 otherwise."""
    i = bad_block(d, L)
    if i is None:
        return 0
    return 2 if d.parts[i] == 1 else 3


def badline_dependence(d: Partition, L, field=None) -> tuple[bool, int]:
    """Stack the kernel conditions of L with the diamond conditions and measure the overlap.

    Returns (dependent, drop) where drop = n + 3n/2 - rank of the stacked system.
    """
    n = d.n
    if len(L) != n:
        raise ShapeError(f"line vector must have length {n}")

    field = field or QQ
    L = [field(x) for x in L]
    if all(x == 0 for x in L):
        raise DomainError("zero vector does not span a line")
    sharp = kernel_conditions(L, n)
    diamond = diamond_conditions(d, symmetric=True)
    full = len(sharp) + len(diamond)
    stacked = rank(DenseMatrix(sharp + diamond, field))
    drop = full - stacked
    return drop > 0, drop
