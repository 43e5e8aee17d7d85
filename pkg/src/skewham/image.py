"""What the image of phi looks like for n = 2, 4, 6, and the rank of its differential."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .commutator import jacobian_matrix, phi, skew_basis
from .errors import ConsistencyError, ShapeError
from .fields import QQ, Field
from .linalg import DenseMatrix, determinant, rank
from .poly import interpolate_poly1
from .symplectic import J_times, random_skew, standard_J


def check_n2_vanishing(samples: int, seed: int, field: Field = QQ) -> bool:
    """phi is identically zero on 2x2 skew matrices."""
    (E,) = skew_basis(2, field)
    if not phi(E, E).is_zero():
        return False
    rng = random.Random(f"n2:{seed}:{field!r}")
    for _ in range(samples):
        A = random_skew(2, rng, field)
        B = random_skew(2, rng, field)
        if not phi(A, B).is_zero():
            return False
    return True


def _require_size(S: DenseMatrix, n: int):
    if S.shape != (n, n):
        raise ShapeError(f"expected a {n}x{n} matrix, got {S.shape}")


def n4_scalar_square(S: DenseMatrix) -> tuple[bool, object]:
    """Is (JS)^2 a scalar matrix?  Returns (answer, lambda); lambda is None when not."""
    _require_size(S, 4)
    H = J_times(S)
    H2 = H @ H
    lam = H2.rows[0][0]
    if H2 == DenseMatrix.identity(4, S.field).scale(lam):
        return True, lam
    return False, None


@dataclass(frozen=True)
class GammaCoefficients:
    """det(S - tJ) = t^6 + gamma4 t^4 + gamma2 t^2 + det."""

    gamma4: object
    gamma2: object
    det: object
    n: int = 6

    def __call__(self, t):
        return t**6 + self.gamma4 * t**4 + self.gamma2 * t**2 + self.det


_GAMMA_NODES = (0, 1, -1, 2, -2, 3, -3)


def gamma_coefficients(S: DenseMatrix) -> GammaCoefficients:
    _require_size(S, 6)
    F = S.field
    if F.characteristic and F.characteristic <= 7:
        raise ValueError("need p > 7 for the interpolation nodes")
    J = standard_J(6, F)
    pts = [(t, determinant(S - J.scale(F(t)))) for t in _GAMMA_NODES]
    c = interpolate_poly1(pts, F).coeffs
    c = c + (0,) * (7 - len(c))
    if any(c[k] != 0 for k in (1, 3, 5)) or c[6] != 1:
        raise ConsistencyError(f"unexpected characteristic coefficients {c}")
    return GammaCoefficients(gamma4=c[4], gamma2=c[2], det=c[0])


def n6_quartic(S: DenseMatrix):
    """gamma4^2 + 4 gamma2.  Equals 21 on the identity; see ``n6_image_equation``."""
    g = gamma_coefficients(S)
    return S.field.reduce(g.gamma4 * g.gamma4 + 4 * g.gamma2)


def jacobian_rank(A: DenseMatrix, B: DenseMatrix) -> int:
    return rank(jacobian_matrix(A, B))


def n6_image_equation(S: DenseMatrix):
    """gamma4^2 - 4 gamma2.

    On S = phi(A, B) the polynomial det(S - tJ) is -(t^3 - a t - b)(t^3 - a t + b),
    so gamma4 = -2a and gamma2 = a^2.  This is the quartic that actually cuts out
    the image; ``n6_quartic`` keeps the + sign and does not vanish there.
    """
    g = gamma_coefficients(S)
    return S.field.reduce(g.gamma4 * g.gamma4 - 4 * g.gamma2)
