"""Univariate polynomials and ternary forms with exact coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import zip_longest
from typing import Callable, Mapping

from .errors import ShapeError
from .fields import QQ, Field


def _strip(coeffs: tuple) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Poly1:
    """Polynomial in one variable, coefficients in ascending degree."""

    coeffs: tuple
    field: Field = QQ

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(tuple(self.field(c) for c in self.coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = self.field.reduce(acc * t + c)
        return acc

    def at_matrix(self, M):
        """Evaluate at a square matrix by Horner's rule."""
        n = M.nrows
        I = type(M).identity(n, M.field)
        acc = type(M).zeros(n, n, M.field)
        for c in reversed(self.coeffs):
            acc = acc @ M + I.scale(c)
        return acc

    def __mul__(self, other: "Poly1") -> "Poly1":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly1(tuple(out), self.field)

    def divmod(self, other: "Poly1") -> tuple["Poly1", "Poly1"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        for k in range(len(q) - 1, -1, -1):
            c = F.div(rem[k + other.degree], lead)
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = F.reduce(rem[k + i] - c * b)
        return Poly1(tuple(q), F), Poly1(tuple(rem), F)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(terms).replace("+ -", "- ")


def monomials3(degree: int) -> list[tuple[int, int, int]]:
    """Exponent triples of total degree ``degree``, in lexicographically decreasing order."""
    return [(i, j, degree - i - j) for i in range(degree, -1, -1) for j in range(degree - i, -1, -1)]


@dataclass(frozen=True)
class HomPoly3:
    """Homogeneous polynomial in z0, z1, z2."""

    degree: int
    coeffs: Mapping[tuple[int, int, int], object] = dc_field(default_factory=dict)
    field: Field = QQ

    def __post_init__(self):
        clean = {}
        for e, c in self.coeffs.items():
            e = tuple(int(x) for x in e)
            if len(e) != 3 or sum(e) != self.degree or min(e) < 0:
                raise ShapeError(f"exponent {e} does not have total degree {self.degree}")
            c = self.field(c)
            if c != 0:
                clean[e] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), reverse=True)))

    def __call__(self, z) -> object:
        F = self.field
        z0, z1, z2 = (F(x) for x in z)
        return F.reduce(sum(c * z0**i * z1**j * z2**k for (i, j, k), c in self.coeffs.items()))

    def __mul__(self, other: "HomPoly3") -> "HomPoly3":
        out: dict = {}
        for (a, b, c), x in self.coeffs.items():
            for (d, e, f), y in other.coeffs.items():
                key = (a + d, b + e, c + f)
                out[key] = out.get(key, 0) + x * y
        return HomPoly3(self.degree + other.degree, out, self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomPoly3):
            return NotImplemented
        return (self.degree, self.coeffs, self.field) == (other.degree, other.coeffs, other.field)

    def __hash__(self):
        return hash((self.degree, tuple(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coeffs.items():
            mono = "*".join(
                f"z{v}" if k == 1 else f"z{v}^{k}" for v, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def interpolation_nodes(degree: int) -> list[tuple[int, int, int]]:
    """The triangular grid (1, a, b) with a + b <= degree.

    Unisolvent for forms of the given degree: dehomogenising at z0 = 1 gives
    bivariate polynomials of total degree <= degree on a principal lattice.
    """
    return [(1, a, b) for a in range(degree + 1) for b in range(degree + 1 - a)]


def interpolate_form(
    values: Callable[[tuple], object], degree: int, field: Field = QQ
) -> HomPoly3:
    """Recover a form of known degree from its values on ``interpolation_nodes``."""
    from .linalg import DenseMatrix, kernel_basis, rank

    if field.characteristic and field.characteristic <= degree:
        raise ValueError("interpolation grid needs p > degree")
    monos = monomials3(degree)
    nodes = interpolation_nodes(degree)
    rows = []
    for z in nodes:
        rows.append([z[0] ** i * z[1] ** j * z[2] ** k for i, j, k in monos] + [values(z)])
    aug = DenseMatrix(rows, field)
    V = aug.submatrix(range(len(nodes)), range(len(monos)))
    if rank(V) != len(monos):
        raise ValueError("interpolation nodes are not unisolvent")
    # the augmented system has a one-dimensional kernel (c, -1)
    (k,) = kernel_basis(aug)
    scale = field.div(-1, k[-1])
    return HomPoly3(degree, {m: field.reduce(c * scale) for m, c in zip(monos, k[:-1])}, field)


def interpolate_poly1(points, field: Field = QQ) -> Poly1:
    """Lagrange interpolation through (t, y) pairs."""
    pts = [(field(t), field(y)) for t, y in points]
    result = Poly1((), field)
    for i, (ti, yi) in enumerate(pts):
        basis = Poly1((1,), field)
        denom = 1
        for j, (tj, _) in enumerate(pts):
            if j != i:
                basis = basis * Poly1((field.reduce(-tj), 1), field)
                denom = field.reduce(denom * (ti - tj))
        scale = field.div(yi, denom)
        result = Poly1(
            tuple(
                field.reduce(a + scale * b)
                for a, b in zip_longest(result.coeffs, basis.coeffs, fillvalue=0)
            ),
            field,
        )
    return result

