from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewham.errors import ShapeError
from skewham.fields import GF
from skewham.poly import HomPoly3, Poly1, interpolate_form, interpolate_poly1, interpolation_nodes, monomials3


def test_poly1_basics():
    p = Poly1((2, -3, 1))
    assert p.degree == 2
    assert p(1) == 0 and p(2) == 0
    assert str(p) == "t^2 - 3*t + 2"
    assert Poly1(()).degree == -1


def test_poly1_divmod():
    q, r = Poly1((2, -3, 1)).divmod(Poly1((-1, 1)))
    assert q.coeffs == (-2, 1) and r.is_zero()


def test_homogeneity_is_enforced():
    with pytest.raises(ShapeError):
        HomPoly3(2, {(1, 0, 0): 1})


def test_monomial_count():
    for d in range(6):
        assert len(monomials3(d)) == (d + 1) * (d + 2) // 2 == len(interpolation_nodes(d))


forms = st.integers(0, 4).flatmap(
    lambda d: st.builds(
        lambda cs: HomPoly3(d, dict(zip(monomials3(d), cs))),
        st.lists(st.integers(-9, 9), min_size=len(monomials3(d)), max_size=len(monomials3(d))),
    )
)


@given(forms)
def test_interpolation_recovers_forms(f):
    assert interpolate_form(f, f.degree) == f


@given(forms)
def test_interpolation_mod_p(f):
    F = GF(101)
    g = HomPoly3(f.degree, f.coeffs, F)
    assert interpolate_form(g, g.degree, F) == g


@given(forms, forms)
def test_form_product_evaluates_pointwise(f, g):
    h = f * g
    for z in [(1, 2, 3), (-1, 0, 5), (Fraction(1, 2), 1, -2)]:
        assert h(z) == f(z) * g(z)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
def test_lagrange(coeffs):
    p = Poly1(tuple(coeffs))
    pts = [(t, p(t)) for t in range(len(coeffs))]
    assert interpolate_poly1(pts) == p
