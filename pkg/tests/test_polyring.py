import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowcalc.polyring import (
    IntPolynomial,
    monomials_of_weighted_degree,
    substitute,
    weighted_degree,
)

from oracles import series_count

XY = (1, 1)
x, y = IntPolynomial.variables(XY, names=("x", "y"))


def polys(grading=(1, 1, 2)):
    n = len(grading)
    mono = st.tuples(*[st.integers(0, 2)] * n)
    return st.dictionaries(mono, st.integers(-5, 5), max_size=4).map(
        lambda t: IntPolynomial(t, grading)
    )


def test_arithmetic_examples():
    assert (x + y) * (x - y) == x**2 - y**2
    assert not (x + y) + (-(x + y))
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert str((x + y) ** 2) == "x^2 + 2*x*y + y^2"


def test_grading_mismatch():
    z = IntPolynomial.variables((2,))[0]
    with pytest.raises(ValueError):
        x + IntPolynomial.variables((1,))[0]
    with pytest.raises(ValueError):
        x * IntPolynomial(z.terms, (1, 2))


@settings(max_examples=100, deadline=None)
@given(polys(), polys(), polys())
def test_distributive(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f


def test_weighted_degree_examples():
    assert weighted_degree((2, 1), (1, 2)) == 4
    assert weighted_degree((0, 0), (1, 2)) == 0
    assert weighted_degree((0, 3), (2, 4)) == 12


def test_monomial_enumeration_examples():
    assert set(monomials_of_weighted_degree((1, 2), 2)) == {(2, 0), (0, 1)}
    assert monomials_of_weighted_degree((2, 4), 3) == []
    four = monomials_of_weighted_degree((1, 2, 3), 4)
    assert set(four) == {(4, 0, 0), (2, 1, 0), (0, 2, 0), (1, 0, 1)}
    assert len(four) == 4


def test_monomial_enumeration_is_sorted_and_unique():
    ms = monomials_of_weighted_degree((1, 2, 3), 9)
    assert ms == sorted(set(ms), reverse=True)


@pytest.mark.parametrize("grading", [(1,), (1, 1), (1, 2), (1, 2, 3), (2, 4, 6), (2, 3, 5, 7), (1, 1, 1, 1)])
def test_monomial_count_matches_series(grading):
    for d in range(21):
        assert len(monomials_of_weighted_degree(grading, d)) == series_count(grading, d)


def test_substitute_examples():
    assert substitute(x**2 + y**2, [y, x]) == x**2 + y**2
    assert substitute(x * y, [-x, y]) == -(x * y)
    assert substitute(x * y, [x, x]) == x**2
    with pytest.raises(ValueError):
        substitute(x * y, [x])


@settings(max_examples=60, deadline=None)
@given(polys(XY), polys(XY), polys(XY), polys(XY))
def test_substitute_is_ring_map(f, g, a, b):
    img = [a, b]
    assert substitute(f * g, img) == substitute(f, img) * substitute(g, img)
    assert substitute(f + g, img) == substitute(f, img) + substitute(g, img)


def test_homogeneity():
    c1, c2 = IntPolynomial.variables((1, 2))
    assert (c1**2 + 3 * c2).is_homogeneous()
    assert (c1**2 + 3 * c2).degree() == 2
    assert not (c1 + c2).is_homogeneous()
