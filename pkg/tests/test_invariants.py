import pytest

from chowcalc.invariants import (
    GL,
    SL,
    Sp,
    check_invariance,
    fundamental_degrees,
    invariant_generator,
    invariant_generators,
    levi_block_invariants,
    levi_elementary_expansion,
    levi_ring,
    weyl_data,
)
from chowcalc.polyring import IntPolynomial, substitute


def test_fundamental_degrees():
    assert fundamental_degrees(GL(3)) == (1, 2, 3)
    assert fundamental_degrees(Sp(4)) == (2, 4)
    assert fundamental_degrees(SL(3)) == (2, 3)


def test_group_validation():
    with pytest.raises(ValueError):
        SL(1)
    with pytest.raises(ValueError):
        GL(0)
    with pytest.raises(ValueError):
        Sp(3)


def test_invariant_generator_examples():
    x1, x2 = IntPolynomial.variables((1, 1), ("x1", "x2"))
    assert invariant_generator(GL(2), 2) == x1 * x2
    assert invariant_generator(Sp(4), 2) == x1**2 * x2**2
    x1, x2, x3 = IntPolynomial.variables((1, 1, 1), ("x1", "x2", "x3"))
    assert invariant_generator(GL(3), 1) == x1 + x2 + x3
    with pytest.raises(ValueError):
        invariant_generator(GL(3), 4)


def test_invariance_examples():
    x1, x2 = IntPolynomial.variables((1, 1), ("x1", "x2"))
    assert check_invariance(x1 * x2, weyl_data(GL(2)))
    assert check_invariance(x1**2 * x2**2, weyl_data(Sp(4)))
    assert not check_invariance(x1 - x2, weyl_data(GL(2)))
    assert not check_invariance(x1 + x2, weyl_data(Sp(4)))


@pytest.mark.parametrize("kind", [GL(1), GL(2), GL(3), GL(4), SL(2), SL(3), SL(4), Sp(2), Sp(4), Sp(6)])
def test_generators_invariant_and_homogeneous(kind):
    W = weyl_data(kind)
    for f, d in zip(invariant_generators(kind), fundamental_degrees(kind)):
        assert check_invariance(f, W)
        assert f.is_homogeneous() and f.degree() == d


def test_levi_expansion_examples():
    grading, names = levi_ring((1, 1))
    a, b = IntPolynomial.variables(grading, names)
    assert levi_elementary_expansion(2, (1, 1)) == a * b
    grading, names = levi_ring((2, 1))
    e1, e2, f1 = IntPolynomial.variables(grading, names)
    assert levi_elementary_expansion(2, (2, 1)) == e2 + e1 * f1
    assert levi_elementary_expansion(1, (2, 1)) == e1 + f1
    with pytest.raises(ValueError):
        levi_elementary_expansion(4, (2, 1))


@pytest.mark.parametrize("blocks", [(1,), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 1, 1), (2, 1, 2)])
def test_levi_expansion_recovers_elementary_symmetric(blocks):
    n = sum(blocks)
    images = levi_block_invariants(blocks)
    for k in range(1, n + 1):
        expanded = substitute(levi_elementary_expansion(k, blocks), images)
        assert expanded == invariant_generator(GL(n), k)
