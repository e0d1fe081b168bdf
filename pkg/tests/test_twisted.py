import pytest

from chowcalc.abelian import AbelianGroupType as G, direct_sum
from chowcalc.invariants import GL, SL, Sp, fundamental_degrees
from chowcalc.polyring import IntPolynomial
from chowcalc.presentations import R1, R2, R3, component_oracle
from chowcalc.twisted import (
    FrobeniusTwist,
    check_prime_power,
    torus_coinvariant_table,
    twist_ideal_generators,
    twisted_coinvariants,
    twisted_coinvariants_levi,
    verify_ideal_reduction,
    verify_levi_reduction,
)

from oracles import poincare_ratio

GRID_KINDS = [GL(1), GL(2), GL(3), GL(4), Sp(4), Sp(6), SL(2), SL(3), SL(4)]
GRID_QS = [2, 3, 4, 5]


def test_prime_power_validation():
    assert check_prime_power(8) == 2
    assert check_prime_power(9) == 3
    for bad in (1, 6, 12, 0):
        with pytest.raises(ValueError):
            FrobeniusTwist(bad)


def test_frobenius_scales_by_degree():
    c1, c2 = IntPolynomial.variables((1, 2))
    sigma = FrobeniusTwist(3)
    assert sigma(c1 * c2 + c1**3) == 27 * (c1 * c2 + c1**3)
    assert sigma(c1 + c2) == 3 * c1 + 9 * c2


def test_twist_ideal_generators_examples():
    assert twist_ideal_generators(fundamental_degrees(GL(2)), 3) == (2, 8)
    assert twist_ideal_generators(fundamental_degrees(Sp(4)), 2) == (3, 15)
    assert twist_ideal_generators(fundamental_degrees(SL(3)), 2) == (3, 7)
    with pytest.raises(ValueError):
        twist_ideal_generators((1,), 6)


def test_twisted_coinvariants_examples():
    P, T = twisted_coinvariants(GL(2), 3, 3)
    assert P == R1(2, 3)
    assert [C.factors for C in T] == [(0,), (2,), (2, 8), (2, 2)]
    P, T = twisted_coinvariants(SL(3), 2, 5)
    assert P == R3(3, 2)
    assert T[2].factors == (3,) and T[3].factors == (7,) and T[4].factors == (3,)
    assert T[5].factors == ()
    P, T = twisted_coinvariants(Sp(4), 2, 4)
    assert P == R2(2, 2)
    assert T[2].factors == (3,) and T[4].factors == (3, 15)


@pytest.mark.parametrize("kind", GRID_KINDS, ids=str)
@pytest.mark.parametrize("q", GRID_QS)
def test_closed_form_equals_oracle_in_invariant_ring(kind, q):
    P, T = twisted_coinvariants(kind, q, 8)
    rels = P.ideal_generators()
    for d in range(9):
        assert T[d] == component_oracle(P.grading, rels, d)


def _tensor_with_multiplicities(T, h):
    return [direct_sum(*(G(T[d - k].factors * h[k]) for k in range(d + 1))) for d in range(len(h))]


@pytest.mark.parametrize("kind,q,D", [
    (GL(2), 3, 7), (GL(3), 2, 6), (GL(3), 5, 5), (Sp(2), 2, 7), (Sp(4), 3, 6),
    (SL(2), 5, 7), (SL(3), 2, 6), (SL(3), 4, 5),
])
def test_torus_quotient_is_free_over_invariant_quotient(kind, q, D):
    # S is free over S^W with Hilbert series prod (1 - t^d_i) / (1 - t)^rank,
    # so S/IS is the closed-form table tensored with those multiplicities
    _, T = twisted_coinvariants(kind, q, D)
    rank = kind.size - 1 if kind.family == "sl" else kind.size
    h = poincare_ratio(fundamental_degrees(kind), [1] * rank, D)
    assert list(torus_coinvariant_table(kind, q, D)) == _tensor_with_multiplicities(T, h)


@pytest.mark.parametrize("kind", [GL(1), GL(2), GL(3), Sp(4), SL(3)], ids=str)
@pytest.mark.parametrize("q", [2, 3, 4])
def test_ideal_reduction_grid(kind, q):
    assert verify_ideal_reduction(kind, q, 8)


@pytest.mark.parametrize("kind,q,D", [(GL(2), 3, 6), (GL(1), 5, 4), (Sp(4), 2, 8)], ids=str)
def test_ideal_reduction_examples(kind, q, D):
    assert verify_ideal_reduction(kind, q, D)


@pytest.mark.parametrize("kind,q", [(GL(2), 3), (GL(3), 2), (Sp(4), 2), (SL(3), 3)], ids=str)
def test_ideal_reduction_in_torus_variables(kind, q):
    assert verify_ideal_reduction(kind, q, 5, ambient="torus")


def test_reduction_detects_a_wrong_ideal():
    from chowcalc.twisted import ideals_equal_through

    c1, c2 = IntPolynomial.variables((1, 2))
    assert not ideals_equal_through((1, 2), [2 * c1, 8 * c2], [2 * c1, 4 * c2], 3)


def test_annihilator_divisibility():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for a in range(1, 9):
            for b in range(a, 25, a):
                assert (q**b - 1) % (q**a - 1) == 0


def test_levi_examples():
    T = twisted_coinvariants_levi((1, 1), 3, 2)
    assert T[1].factors == (2, 0)
    assert T[2].factors == (2, 2, 8)
    T = twisted_coinvariants_levi((1, 1), 2, 1)
    assert T[1].factors == (0,)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [2, 3, 5])
def test_levi_single_block_is_the_group(n, q):
    _, T = twisted_coinvariants(GL(n), q, 7)
    assert twisted_coinvariants_levi((n,), q, 7) == T


@pytest.mark.parametrize("blocks,q", [((1, 1), 3), ((2, 1), 2), ((1, 2), 4), ((1, 1, 1), 3), ((2, 2), 3), ((3, 1), 2)])
def test_levi_table_against_partial_flag_multiplicities(blocks, q):
    # consistency check only: S^{W_L} free over S^{W_G} with Gaussian multinomial ranks
    D = 6
    n = sum(blocks)
    _, T = twisted_coinvariants(GL(n), q, D)
    h = poincare_ratio(range(1, n + 1), [j for b in blocks for j in range(1, b + 1)], D)
    assert list(twisted_coinvariants_levi(blocks, q, D)) == _tensor_with_multiplicities(T, h)


def test_levi_reduction_certificate():
    assert verify_levi_reduction((2, 1), 3, 6)
    assert verify_levi_reduction((1, 1, 1), 2, 5)


def test_levi_torus_equals_torus_quotient():
    assert twisted_coinvariants_levi((1, 1, 1), 2, 5) == torus_coinvariant_table(GL(3), 2, 5)
