"""Pencils of skew forms: the matrix H0(f), the rank law, the discriminant and the r = n resolution."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import ConsistencyError, DomainError, PreconditionError, ShapeError
from .fields import QQ, Field
from .linalg import DenseMatrix, congruence_diagonalize, determinant, pfaffian, rank
from .poly import HomPoly3, interpolate_form
from .symplectic import random_skew


@dataclass(frozen=True)
class PencilTensor:
    """Three skew n x n slices; f(z) = z0 P + z1 Q + z2 R."""

    P: DenseMatrix
    Q: DenseMatrix
    R: DenseMatrix

    def __post_init__(self):
        shapes = {self.P.shape, self.Q.shape, self.R.shape}
        if len(shapes) != 1:
            raise ShapeError(f"slices have different shapes {sorted(shapes)}")
        if not (self.P.field == self.Q.field == self.R.field):
            raise ShapeError("slices live over different fields")
        for name in "PQR":
            M = getattr(self, name)
            if not M.is_square() or not M.is_skew():
                raise ShapeError(f"slice {name} is not skew-symmetric")

    @property
    def n(self) -> int:
        return self.P.nrows

    @property
    def field(self) -> Field:
        return self.P.field

    @property
    def slices(self) -> tuple[DenseMatrix, DenseMatrix, DenseMatrix]:
        return self.P, self.Q, self.R


def h0f_matrix(f: PencilTensor) -> DenseMatrix:
    """[[0, P, Q], [-P, 0, R], [-Q, -R, 0]], symmetric of size 3n."""
    Z = DenseMatrix.zeros(f.n, f.n, f.field)
    P, Q, R = f.slices
    return DenseMatrix.block([[Z, P, Q], [-P, Z, R], [-Q, -R, Z]])


def rank_h0f(f: PencilTensor) -> int:
    return rank(h0f_matrix(f))


def z_matrix(f: PencilTensor) -> DenseMatrix:
    """P Q^-1 R - R Q^-1 P."""
    P, Q, R = f.slices
    try:
        Qi = Q.inverse()
    except ZeroDivisionError:
        raise PreconditionError("slice Q is singular") from None
    return P @ Qi @ R - R @ Qi @ P


def pencil_eval(f: PencilTensor, z) -> DenseMatrix:
    if len(z) != 3:
        raise ShapeError("a point of the plane has three coordinates")
    F = f.field
    z0, z1, z2 = (F(c) for c in z)
    return f.P.scale(z0) + f.Q.scale(z1) + f.R.scale(z2)


def _extra_nodes(seed: str, count: int, field: Field) -> list[tuple]:
    rng = random.Random(seed)
    return [tuple(field(field.random(rng, 20)) for _ in range(3)) for _ in range(count)]


def _form_of(values, degree: int, field: Field, tag: str) -> HomPoly3:
    form = interpolate_form(values, degree, field)
    for z in _extra_nodes(tag, 5, field):
        if form(z) != values(z):
            raise ConsistencyError(f"interpolated form disagrees at {z}")
    return form


def discriminant(f: PencilTensor) -> HomPoly3:
    """The degree-n/2 form z -> Pf(f(z))."""
    if f.n % 2:
        raise DomainError("the discriminant needs even n")
    return _form_of(lambda z: pfaffian(pencil_eval(f, z)), f.n // 2, f.field, f"pf:{f.n}")


def determinant_form(f: PencilTensor) -> HomPoly3:
    """The degree-n form z -> det(f(z))."""
    return _form_of(lambda z: determinant(pencil_eval(f, z)), f.n, f.field, f"det:{f.n}")


def _nonzero_point(z):
    if all(c == 0 for c in z):
        raise DomainError("the zero vector is not a point of the plane")


def is_jumping_line(f: PencilTensor, z) -> bool:
    _nonzero_point(z)
    return pfaffian(pencil_eval(f, z)) == 0


def splitting_h0(f: PencilTensor, z) -> int:
    """dim ker f(z); zero exactly on lines with trivial splitting."""
    _nonzero_point(z)
    return f.n - rank(pencil_eval(f, z))


# -- r = n resolution -----------------------------------------------------------

MONOMIALS = tuple(combinations_with_replacement(range(3), 2))


@dataclass(frozen=True)
class MonadResolution:
    """alpha(x) = sum x_k alpha[k] (3n x n) and beta(x) = sum x_k beta[k] (n x 3n)."""

    alpha: tuple[DenseMatrix, DenseMatrix, DenseMatrix]
    beta: tuple[DenseMatrix, DenseMatrix, DenseMatrix]
    n: int

    def alpha_at(self, x) -> DenseMatrix:
        return _combine(self.alpha, x)

    def beta_at(self, x) -> DenseMatrix:
        return _combine(self.beta, x)

    def product_coefficients(self) -> dict[tuple[int, int], DenseMatrix]:
        """Coefficient of x_i x_j (i <= j) in beta(x) alpha(x)."""
        a, b = self.alpha, self.beta
        out = {}
        for i, j in MONOMIALS:
            out[(i, j)] = b[i] @ a[i] if i == j else b[i] @ a[j] + b[j] @ a[i]
        return out


def _combine(mats, x) -> DenseMatrix:
    F = mats[0].field
    acc = mats[0].scale(F(x[0]))
    for M, c in zip(mats[1:], x[1:]):
        acc = acc + M.scale(F(c))
    return acc


def build_resolution(f: PencilTensor, seed: int = 0, checks: int = 10) -> MonadResolution:
    """alpha = (DM) X, beta = X^T M^T where M^T D M = H0(f) and X = [x0 I; x1 I; x2 I].

    Then beta alpha = X^T H0(f) X, which vanishes identically; both are verified.
    """
    n, F = f.n, f.field
    H = h0f_matrix(f)
    if rank(H) != 3 * n:
        raise PreconditionError(f"rank H0(f) = {rank(H)} != 3n = {3 * n}")
    M, D = congruence_diagonalize(H)
    DM = D @ M
    cols = [list(range(k * n, (k + 1) * n)) for k in range(3)]
    alpha = tuple(DM.submatrix(range(3 * n), c) for c in cols)
    beta = tuple(M.submatrix(range(3 * n), c).T for c in cols)
    res = MonadResolution(alpha, beta, n)
    for mono, C in res.product_coefficients().items():
        if not C.is_zero():
            raise ConsistencyError(f"beta alpha has a nonzero x{mono} coefficient")
    rng = random.Random(f"resolution:{n}:{seed}:{F!r}")
    for _ in range(checks):
        x = [F(F.random(rng, 20)) for _ in range(3)]
        if all(c == 0 for c in x):
            x[0] = F(1)
        if rank(res.alpha_at(x)) != n or rank(res.beta_at(x)) != n:
            raise ConsistencyError(f"fiber rank drops at x = {x}")
    return res


# -- instances --------------------------------------------------------------------

def random_pencil(n: int, seed: int, field: Field = QQ, bound: int = 5) -> PencilTensor:
    rng = random.Random(f"pencil:{n}:{seed}:{field!r}")
    return PencilTensor(*(random_skew(n, rng, field, bound) for _ in range(3)))


def pencil_with_jumping_line(n: int, z, seed: int, field: Field = QQ) -> PencilTensor:
    """A random pencil whose value at z (with z0 != 0) is a singular skew matrix."""
    F = field
    z0, z1, z2 = (F(c) for c in z)
    if z0 == 0:
        raise DomainError("need z0 != 0")
    rng = random.Random(f"jumping:{n}:{seed}:{F!r}")
    Q = random_skew(n, rng, F)
    R = random_skew(n, rng, F)
    # C^T K C with K of rank n - 2 is a singular skew matrix
    K = DenseMatrix.zeros(2, 2, F)
    if n > 2:
        K = DenseMatrix.block_diag(random_skew(n - 2, rng, F), K)
    C = DenseMatrix([[F.random(rng, 3) for _ in range(n)] for _ in range(n)], F)
    singular = C.T @ K @ C
    P = (singular - Q.scale(z1) - R.scale(z2)).scale(F.inv(z0))
    return PencilTensor(P, Q, R)
