"""Coinvariants of the Frobenius twist.

The ``q``-power Frobenius multiplies characters of the split torus by
``q``, hence acts on a homogeneous element of ``S = Sym(characters)`` of
degree ``d`` as multiplication by ``q**d``.  For a special group ``G`` and
a Levi ``L`` the equivariant Chow ring of ``G`` under twisted conjugation
is ``S^{W_L} / (f - sigma f : f in S_+^{W_G})``.  Writing ``f`` in the
fundamental invariants ``c_i`` and telescoping
``(1 - q^(a+b)) f g = (1 - q^a) f g + q^a f (1 - q^b) g`` reduces this
ideal to ``((q^{d_i} - 1) c_i)``; :func:`verify_ideal_reduction` checks the
reduction degree by degree with Hermite forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from sympy import factorint

from .abelian import IntMatrix, hermite_slice_equal
from .invariants import (
    GL,
    GroupKind,
    fundamental_degrees,
    invariant_generators,
    levi_elementary_expansion,
    levi_ring,
)
from .polyring import IntPolynomial, monomials_up_to_degree, substitute
from .presentations import (
    DiagonalPresentation,
    Generator,
    GradedTable,
    closed_form_table,
    oracle_table,
    slice_relations,
)

__all__ = [
    "FrobeniusTwist",
    "check_prime_power",
    "twist_ideal_generators",
    "twisted_ideal",
    "diagonal_ideal",
    "ideals_equal_through",
    "verify_ideal_reduction",
    "twisted_coinvariants",
    "torus_coinvariant_table",
    "levi_ideal_generators",
    "verify_levi_reduction",
    "twisted_coinvariants_levi",
]


def check_prime_power(q: int) -> int:
    """Return the prime ``p`` with ``q = p^k``, ``k >= 1``."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be a prime power >= 2, got {q!r}")
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"q = {q} is not a prime power")
    return next(iter(f))


@dataclass(frozen=True)
class FrobeniusTwist:
    """The action ``sigma f = q^deg(f) f`` on a graded polynomial ring."""

    q: int

    def __post_init__(self):
        check_prime_power(self.q)

    @property
    def p(self) -> int:
        return check_prime_power(self.q)

    def factor(self, d: int) -> int:
        return self.q**d

    def __call__(self, f: IntPolynomial) -> IntPolynomial:
        g = f.grading
        terms = {m: c * self.q ** sum(e * w for e, w in zip(m, g)) for m, c in f.terms.items()}
        return IntPolynomial(terms, f.grading, f.names)


def twist_ideal_generators(degrees: Sequence[int], q: int) -> tuple[int, ...]:
    """Annihilators ``q^{d_i} - 1``.

    >>> twist_ideal_generators((1, 2), 3)
    (2, 8)
    """
    twist = FrobeniusTwist(q)
    if any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    return tuple(twist.factor(d) - 1 for d in degrees)


def _invariant_ring(kind: GroupKind):
    """Ambient ring ``Z[c_i]`` of S^W and the extra generators imposed on it."""
    if kind.family == "sl":
        # GL variables with e_1 = 0 adjoined
        grading = tuple(range(1, kind.size + 1))
        names = tuple(f"c{i}" for i in grading)
        c1 = IntPolynomial.variables(grading, names)[0]
        return grading, names, [c1]
    grading = fundamental_degrees(kind)
    return grading, tuple(f"c{d}" for d in grading), []


def twisted_ideal(
    grading: Sequence[int],
    names: Sequence[str],
    q: int,
    D: int,
    images: Sequence[IntPolynomial] | None = None,
) -> list[IntPolynomial]:
    """``f - sigma f`` for every monomial ``f`` in the invariants of degree ``1..D``.

    With ``images`` the invariants are first substituted by those
    polynomials (invariants written in some overring).
    """
    sigma = FrobeniusTwist(q)
    out = []
    for m in monomials_up_to_degree(grading, D):
        if not any(m):
            continue
        f = IntPolynomial.monomial(m, grading, names)
        if images is not None:
            f = substitute(f, images)
        out.append(f - sigma(f))
    return out


def diagonal_ideal(
    grading: Sequence[int],
    names: Sequence[str],
    q: int,
    images: Sequence[IntPolynomial] | None = None,
) -> list[IntPolynomial]:
    """``(q^{d_i} - 1) c_i`` for each invariant generator."""
    xs = IntPolynomial.variables(grading, names) if images is None else list(images)
    return [(q**d - 1) * x for d, x in zip(grading, xs)]


def ideals_equal_through(
    grading: Sequence[int], first: Sequence[IntPolynomial], second: Sequence[IntPolynomial], D: int
) -> bool:
    """Whether two homogeneous ideals agree in every degree ``0..D``."""
    for d in range(D + 1):
        basis, rows_a = slice_relations(grading, first, d)
        _, rows_b = slice_relations(grading, second, d)
        A = IntMatrix.from_rows(rows_a, len(basis))
        B = IntMatrix.from_rows(rows_b, len(basis))
        if not hermite_slice_equal(A, B):
            return False
    return True


def verify_ideal_reduction(kind: GroupKind, q: int, D: int, ambient: str = "invariants") -> bool:
    """Check ``(f - sigma f : f in S_+^W) = ((q^{d_i} - 1) c_i)`` through degree ``D``.

    ``ambient="invariants"`` compares the ideals inside ``S^W = Z[c_i]``;
    ``ambient="torus"`` compares the ideals they generate in ``S`` itself,
    with the ``c_i`` expanded in torus variables.
    """
    if D < 2:
        raise ValueError("cutoff must be at least 2")
    grading, names, extra = _invariant_ring(kind)
    if ambient == "invariants":
        twisted = twisted_ideal(grading, names, q, D) + extra
        diagonal = diagonal_ideal(grading, names, q) + extra
        return ideals_equal_through(grading, twisted, diagonal, D)
    if ambient != "torus":
        raise ValueError(f"unknown ambient {ambient!r}")
    if kind.family == "sl":
        images = invariant_generators(GL(kind.size))
    else:
        images = invariant_generators(kind)
    torus = images[0].grading
    extra_t = [images[0]] if kind.family == "sl" else []
    twisted = twisted_ideal(grading, names, q, D, images) + extra_t
    diagonal = diagonal_ideal(grading, names, q, images) + extra_t
    return ideals_equal_through(torus, twisted, diagonal, D)


def twisted_coinvariants(
    kind: GroupKind, q: int, D: int
) -> tuple[DiagonalPresentation, GradedTable]:
    """Presentation ``Z[c_i]/((q^{d_i} - 1) c_i)`` and its closed-form table."""
    if D < 0:
        raise ValueError("cutoff must be nonnegative")
    degs = fundamental_degrees(kind)
    anns = twist_ideal_generators(degs, q)
    P = DiagonalPresentation(tuple(Generator(f"c{d}", d, a) for d, a in zip(degs, anns)))
    return P, closed_form_table(P, D)


def torus_coinvariant_table(kind: GroupKind, q: int, D: int) -> GradedTable:
    """``S / (q^{d_i} - 1) f_i`` computed by Smith forms in torus variables."""
    if kind.family == "sl":
        gens = invariant_generators(GL(kind.size))
        rels = [gens[0]] + [(q**d - 1) * f for d, f in zip(range(2, kind.size + 1), gens[1:])]
    else:
        gens = invariant_generators(kind)
        rels = [(q**d - 1) * f for d, f in zip(fundamental_degrees(kind), gens)]
    return oracle_table(gens[0].grading, rels, D)


# --------------------------------------------------------------------------
# block Levi subgroups of GL_n


def levi_ideal_generators(blocks: Sequence[int], q: int) -> list[IntPolynomial]:
    n = sum(blocks)
    FrobeniusTwist(q)
    return [(q**k - 1) * levi_elementary_expansion(k, blocks) for k in range(1, n + 1)]


def verify_levi_reduction(blocks: Sequence[int], q: int, D: int) -> bool:
    """Compare the full twisted ideal in ``S^{W_L}`` with the diagonal generators."""
    blocks = tuple(blocks)
    grading, _ = levi_ring(blocks)
    n = sum(blocks)
    g_grading = tuple(range(1, n + 1))
    g_names = tuple(f"c{i}" for i in g_grading)
    images = [levi_elementary_expansion(k, blocks) for k in g_grading]
    twisted = twisted_ideal(g_grading, g_names, q, D, images)
    return ideals_equal_through(grading, twisted, levi_ideal_generators(blocks, q), D)


def twisted_coinvariants_levi(
    blocks: Sequence[int], q: int, D: int, certify: bool = True
) -> GradedTable:
    """Degree slices of ``S^{W_L} / (f - sigma f : f in S_+^{W_G})`` for a block Levi.

    Computed by Smith forms in the ring of block invariants ``e_j^(b)``.
    With ``certify`` the reduction of the full twisted ideal to the
    generators ``(q^k - 1) e_k`` is checked first.
    """
    blocks = tuple(blocks)
    grading, _ = levi_ring(blocks)
    if D < 0:
        raise ValueError("cutoff must be nonnegative")
    if certify and D >= 1 and not verify_levi_reduction(blocks, q, D):
        raise RuntimeError(f"twisted ideal for blocks {blocks} did not reduce")
    return oracle_table(grading, levi_ideal_generators(blocks, q), D)

