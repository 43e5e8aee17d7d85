"""Hypothesis strategies for small exact matrices."""

from hypothesis import strategies as st

from skewham.fields import GF, QQ
from skewham.linalg import DenseMatrix

small_int = st.integers(-6, 6)


@st.composite
def square(draw, n=None, lo=1, hi=5, elems=small_int):
    n = n if n is not None else draw(st.integers(lo, hi))
    return [[draw(elems) for _ in range(n)] for _ in range(n)]


@st.composite
def skew(draw, n=None, sizes=(2, 4, 6), field=QQ):
    n = n if n is not None else draw(st.sampled_from(sizes))
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a[i][j] = draw(small_int)
            a[j][i] = -a[i][j]
    return DenseMatrix(a, field)


@st.composite
def symmetric(draw, n=None, sizes=(2, 4, 6), field=QQ):
    n = n if n is not None else draw(st.sampled_from(sizes))
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = draw(small_int)
    return DenseMatrix(a, field)


@st.composite
def skew_pair(draw, sizes=(4, 6), field=QQ):
    n = draw(st.sampled_from(sizes))
    return draw(skew(n, field=field)), draw(skew(n, field=field))


fields = st.sampled_from([QQ, GF(101), GF(7)])

