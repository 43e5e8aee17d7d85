"""Dense exact matrices and the elimination kernels used everywhere else.

Rank, kernel and determinant over QQ run fraction-free (Bareiss) on integer
rows after clearing denominators row by row; over GF(p) they run plain Gauss
elimination on residues.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import FieldMismatch, ShapeError, UnsupportedField
from .fields import QQ, Field
from .poly import Poly1

Vector = tuple


class DenseMatrix:
    """Immutable rectangular matrix over an exact field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], field: Field = QQ):
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        self._set(field, rows, len(rows), ncols)

    def _set(self, field, rows, nrows, ncols):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("DenseMatrix is immutable")

    @classmethod
    def _raw(cls, field: Field, rows, ncols: int | None = None) -> "DenseMatrix":
        # rows must already be reduced tuples
        self = object.__new__(cls)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        self._set(field, rows, len(rows), ncols)
        return self

    @classmethod
    def zeros(cls, m: int, n: int | None = None, field: Field = QQ) -> "DenseMatrix":
        n = m if n is None else n
        return cls._raw(field, tuple((0,) * n for _ in range(m)), n)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "DenseMatrix":
        return cls._raw(field, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def diag(cls, entries: Sequence, field: Field = QQ) -> "DenseMatrix":
        n = len(entries)
        e = [field(x) for x in entries]
        return cls._raw(field, tuple(tuple(e[i] if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], field: Field = QQ) -> "DenseMatrix":
        return cls(zip(*cols), field) if cols else cls.zeros(0, 0, field)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["DenseMatrix"]]) -> "DenseMatrix":
        field = blocks[0][0].field
        rows = []
        for brow in blocks:
            _check_fields(*brow)
            if any(b.field != field for b in brow):
                raise FieldMismatch("blocks over different fields")
            h = brow[0].nrows
            if any(b.nrows != h for b in brow):
                raise ShapeError("block row heights differ")
            for i in range(h):
                rows.append(tuple(x for b in brow for x in b.rows[i]))
        return cls._raw(field, tuple(rows))

    @classmethod
    def block_diag(cls, *blocks: "DenseMatrix") -> "DenseMatrix":
        field = blocks[0].field
        n = sum(b.ncols for b in blocks)
        rows = []
        off = 0
        for b in blocks:
            if b.field != field:
                raise FieldMismatch("blocks over different fields")
            for r in b.rows:
                rows.append((0,) * off + r + (0,) * (n - off - b.ncols))
            off += b.ncols
        return cls._raw(field, tuple(rows), n)

    # -- basic protocol -------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self) -> int:
        return hash((self.field, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"DenseMatrix<{self.field!r}>[{body}]"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> "DenseMatrix":
        return DenseMatrix._raw(self.field, tuple(zip(*self.rows)) if self.nrows else (), self.nrows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def is_skew(self) -> bool:
        if not self.is_square():
            return False
        red = self.field.reduce
        n = self.nrows
        return all(
            red(self.rows[i][j] + self.rows[j][i]) == 0 for i in range(n) for j in range(i, n)
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "DenseMatrix":
        return DenseMatrix._raw(
            self.field, tuple(tuple(self.rows[i][j] for j in cols) for i in rows), len(cols)
        )

    def trace(self):
        return self.field.reduce(sum(self.rows[i][i] for i in range(min(self.shape))))

    # -- arithmetic -----------------------------------------------------
    def _same(self, other: "DenseMatrix"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if self.shape != other.shape:
            raise ShapeError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._same(other)
        red = self.field.reduce
        return DenseMatrix._raw(
            self.field,
            tuple(tuple(red(x + y) for x, y in zip(a, b)) for a, b in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._same(other)
        red = self.field.reduce
        return DenseMatrix._raw(
            self.field,
            tuple(tuple(red(x - y) for x, y in zip(a, b)) for a, b in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __neg__(self) -> "DenseMatrix":
        red = self.field.reduce
        return DenseMatrix._raw(self.field, tuple(tuple(red(-x) for x in r) for r in self.rows), self.ncols)

    def scale(self, c) -> "DenseMatrix":
        c = self.field(c)
        red = self.field.reduce
        return DenseMatrix._raw(self.field, tuple(tuple(red(c * x) for x in r) for r in self.rows), self.ncols)

    def __rmul__(self, c) -> "DenseMatrix":
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, DenseMatrix):
            if self.field != other.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            if self.ncols != other.nrows:
                raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
            red = self.field.reduce
            cols = tuple(zip(*other.rows)) if other.nrows else ((),) * other.ncols
            return DenseMatrix._raw(
                self.field,
                tuple(tuple(red(sum(x * y for x, y in zip(r, c))) for c in cols) for r in self.rows),
                other.ncols,
            )
        v = tuple(other)
        if len(v) != self.ncols:
            raise ShapeError("vector length mismatch")
        red = self.field.reduce
        return tuple(red(sum(x * y for x, y in zip(r, v))) for r in self.rows)

    def __pow__(self, k: int) -> "DenseMatrix":
        if not self.is_square() or k < 0:
            raise ShapeError("power needs a square matrix and k >= 0")
        result = DenseMatrix.identity(self.nrows, self.field)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def inverse(self) -> "DenseMatrix":
        if not self.is_square():
            raise ShapeError("inverse of a non-square matrix")
        n = self.nrows
        F = self.field
        aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = F.inv(aug[c][c])
            aug[c] = [F.reduce(inv * x) for x in aug[c]]
            pr = aug[c]
            for i in range(n):
                if i != c and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [F.reduce(x - f * y) for x, y in zip(aug[i], pr)]
        return DenseMatrix._raw(F, tuple(tuple(r[n:]) for r in aug), n)


def _check_fields(*ms: DenseMatrix) -> Field:
    f = ms[0].field
    for m in ms[1:]:
        if m.field != f:
            raise FieldMismatch(f"{f!r} vs {m.field!r}")
    return f


# ----------------------------------------------------------------------
# elimination kernels

def _integer_rows(M: DenseMatrix) -> tuple[list[list[int]], int]:
    """Clear denominators row by row; returns rows and the product of scalings."""
    rows = []
    scale = 1
    for r in M.rows:
        den = 1
        for x in r:
            if type(x) is Fraction:
                den = lcm(den, x.denominator)
        if den == 1:
            rows.append(list(r))
        else:
            rows.append([int(x * den) for x in r])
            scale *= den
    return rows, scale


def _bareiss(rows: list[list[int]]) -> tuple[list[int], int]:
    """Fraction-free row echelon form in place.

    Returns (pivot columns, permutation sign).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    prev = 1
    r = 0
    sign = 1
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        pr = rows[r]
        a = pr[c]
        tail = pr[c:]
        head = [0] * c
        for i in range(r + 1, m):
            row = rows[i]
            b = row[c]
            if b:
                rows[i] = head + [(a * x - b * y) // prev for x, y in zip(row[c:], tail)]
            elif a != prev:
                rows[i] = head + [a * x // prev for x in row[c:]]
        prev = a
        pivots.append(c)
        r += 1
    return pivots, sign


def _gauss_mod(rows: list[list[int]], p: int) -> tuple[list[int], int]:
    """Row echelon form over GF(p) in place, pivots normalised to 1."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    sign = 1
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        pivots.append(c)
        r += 1
        pr = rows[r - 1]
        tail = pr[c:]
        for i in range(r, m):
            row = rows[i]
            b = row[c]
            if b:
                f = b * pow(pr[c], -1, p)
                rows[i] = row[:c] + [(x - f * y) % p for x, y in zip(row[c:], tail)]
    return pivots, sign


def _echelon(M: DenseMatrix):
    if M.field.characteristic == 0:
        rows, scale = _integer_rows(M)
        pivots, sign = _bareiss(rows)
        return rows, pivots, sign, scale
    rows = [list(r) for r in M.rows]
    pivots, sign = _gauss_mod(rows, M.field.characteristic)
    return rows, pivots, sign, 1


def rank(M: DenseMatrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    _, pivots, _, _ = _echelon(M)
    return len(pivots)


def kernel_basis(M: DenseMatrix) -> list[Vector]:
    """Basis of {v : Mv = 0}, one vector per free column (free entry set to 1)."""
    F = M.field
    n = M.ncols
    if M.nrows == 0:
        return [tuple(int(i == j) for i in range(n)) for j in range(n)]
    rows, pivots, _, _ = _echelon(M)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    basis = []
    for f in free:
        x: list = [0] * n
        x[f] = 1
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            row = rows[r]
            s = sum(row[j] * x[j] for j in range(c + 1, n) if x[j] != 0)
            x[c] = F.div(-s, row[c]) if s != 0 else 0
        basis.append(tuple(F.reduce(v) for v in x))
    return basis


def determinant(M: DenseMatrix):
    if not M.is_square():
        raise ShapeError("determinant of a non-square matrix")
    n = M.nrows
    if n == 0:
        return 1
    F = M.field
    rows, pivots, sign, scale = _echelon(M)
    if len(pivots) < n:
        return 0
    if F.characteristic == 0:
        return F.div(sign * rows[n - 1][n - 1], scale)
    prod = sign
    for i in range(n):
        prod = prod * rows[i][i] % F.characteristic
    return F.reduce(prod)


def pfaffian(A: DenseMatrix):
    """Pfaffian by skew elimination onto 2x2 blocks; Pf([[0,1],[-1,0]]) = 1."""
    if not A.is_square() or A.nrows % 2 or not A.is_skew():
        raise ShapeError("pfaffian needs an even-size skew-symmetric matrix")
    F = A.field
    a = [list(r) for r in A.rows]
    n = A.nrows
    pf = 1
    for k in range(0, n, 2):
        piv = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
        if piv is None:
            return 0
        if piv != k + 1:
            # simultaneous row/column swap k+1 <-> piv flips the sign
            a[k + 1], a[piv] = a[piv], a[k + 1]
            for row in a:
                row[k + 1], row[piv] = row[piv], row[k + 1]
            pf = -pf
        p = a[k][k + 1]
        pf = F.reduce(pf * p)
        c0 = a[k]
        c1 = a[k + 1]
        for i in range(k + 2, n):
            u0, u1 = c0[i], c1[i]
            if u0 == 0 and u1 == 0:
                continue
            ai = a[i]
            for j in range(k + 2, n):
                t = u1 * c0[j] - u0 * c1[j]
                if t != 0:
                    ai[j] = F.reduce(ai[j] + F.div(t, p))
    return pf


def minimal_polynomial(M: DenseMatrix) -> Poly1:
    """Monic minimal polynomial via the first linear dependence among I, M, M^2, ..."""
    if not M.is_square():
        raise ShapeError("minimal polynomial of a non-square matrix")
    F = M.field
    n = M.nrows
    powers = [DenseMatrix.identity(n, F)]
    for k in range(1, n + 1):
        powers.append(powers[-1] @ M)
        cols = [tuple(x for r in P.rows for x in r) for P in powers]
        K = DenseMatrix._raw(F, tuple(zip(*cols)), k + 1)
        if rank(K) <= k:
            (v,) = kernel_basis(K)
            lead = v[k]
            return Poly1(tuple(F.div(c, lead) for c in v), F)
    raise AssertionError("unreachable: Cayley-Hamilton bounds the degree by n")


def congruence_diagonalize(S: DenseMatrix) -> tuple[DenseMatrix, DenseMatrix]:
    """Return (M, D) with M invertible, D diagonal and M^T D M = S."""
    if not S.is_symmetric():
        raise ShapeError("congruence_diagonalize needs a symmetric matrix")
    F = S.field
    if F.characteristic == 2:
        raise UnsupportedField("characteristic 2")
    n = S.nrows
    a = [list(r) for r in S.rows]
    # E accumulates the row operations: E S E^T = D
    E = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        E[i], E[j] = E[j], E[i]

    def add(dst, src, f):
        # row_dst += f row_src, then the same on columns
        a[dst] = [F.reduce(x + f * y) for x, y in zip(a[dst], a[src])]
        for row in a:
            row[dst] = F.reduce(row[dst] + f * row[src])
        E[dst] = [F.reduce(x + f * y) for x, y in zip(E[dst], E[src])]

    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue
                add(k, j, 1)  # new pivot 2 a[k][j] != 0 since char != 2
        piv = a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                add(i, k, F.div(-a[i][k], piv))
    D = DenseMatrix.diag([a[i][i] for i in range(n)], F)
    Emat = DenseMatrix._raw(F, tuple(tuple(r) for r in E), n)
    # S = E^{-1} D E^{-T}, so M = E^{-T}
    M = Emat.inverse().T
    return M, D
