"""Graded rings ``Z[g_1..g_r]/(m_1 g_1, ..., m_r g_r)`` and their degree slices.

The degree-``d`` part of such a ring has one cyclic summand per monomial
of weighted degree ``d``; the summand is ``Z/gcd`` of the annihilators of
the generators occurring in the monomial.  :func:`component_oracle`
recomputes any degree slice of ``Z[g]/I`` for a homogeneous ideal ``I`` by
brute-force Smith normal form and is the independent check of that rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Sequence

from .abelian import (
    AbelianGroupType,
    IntMatrix,
    check_primes,
    cokernel,
    localize,
    rank_mod_p,
)
from .polyring import IntPolynomial, monomials_of_weighted_degree

__all__ = [
    "Generator",
    "DiagonalPresentation",
    "GradedTable",
    "DEFAULT_CUTOFF",
    "component_closed_form",
    "closed_form_table",
    "component_oracle",
    "oracle_table",
    "slice_relations",
    "reduce_mod_l",
    "hilbert_mod_l",
    "mod_l_dimension_oracle",
    "localize_presentation",
    "localize_table",
    "R1",
    "R2",
    "R3",
]

DEFAULT_CUTOFF = 12


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    annihilator: int

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"generator {self.name} must have positive degree")
        if self.annihilator < 0:
            raise ValueError(f"generator {self.name} has negative annihilator")


@dataclass(frozen=True)
class DiagonalPresentation:
    generators: tuple[Generator, ...]

    def __post_init__(self):
        gens = tuple(g if isinstance(g, Generator) else Generator(*g) for g in self.generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        object.__setattr__(self, "generators", gens)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def grading(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @property
    def annihilators(self) -> tuple[int, ...]:
        return tuple(g.annihilator for g in self.generators)

    def ideal_generators(self) -> list[IntPolynomial]:
        """The relations ``m_i g_i`` as polynomials in the generators."""
        n = len(self.generators)
        return [
            IntPolynomial.monomial(
                tuple(int(i == j) for j in range(n)), self.grading, self.names, g.annihilator
            )
            for i, g in enumerate(self.generators)
        ]

    def __str__(self):
        if not self.generators:
            return "Z"
        gens = ",".join(self.names)
        rels = ",".join(
            g.name if g.annihilator == 1 else f"{g.annihilator}{g.name}" for g in self.generators
        )
        return f"Z[{gens}]/({rels})"


@dataclass(frozen=True)
class GradedTable:
    """Abelian group of each degree ``0..max_degree``."""

    components: tuple[AbelianGroupType, ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, AbelianGroupType]) -> GradedTable:
        top = max(mapping) if mapping else -1
        return cls(tuple(mapping.get(d, AbelianGroupType()) for d in range(top + 1)))

    @property
    def max_degree(self) -> int:
        return len(self.components) - 1

    def __getitem__(self, d: int) -> AbelianGroupType:
        if not 0 <= d < len(self.components):
            raise IndexError(f"degree {d} outside 0..{self.max_degree}")
        return self.components[d]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def items(self):
        return enumerate(self.components)

    def truncate(self, max_degree: int) -> GradedTable:
        return GradedTable(self.components[: max_degree + 1])

    def as_lists(self) -> list[list[int]]:
        return [list(G.factors) for G in self.components]

    def __str__(self):
        return "\n".join(f"{d}: {G}" for d, G in self.items())


def R1(n: int, q: int) -> DiagonalPresentation:
    """``Z[c_1..c_n]/((q^i - 1) c_i)``."""
    return DiagonalPresentation(tuple(Generator(f"c{i}", i, q**i - 1) for i in range(1, n + 1)))


def R2(m: int, q: int) -> DiagonalPresentation:
    """``Z[c_2, c_4, .., c_2m]/((q^2i - 1) c_2i)``."""
    return DiagonalPresentation(
        tuple(Generator(f"c{2 * i}", 2 * i, q ** (2 * i) - 1) for i in range(1, m + 1))
    )


def R3(n: int, q: int) -> DiagonalPresentation:
    """``Z[c_2..c_n]/((q^i - 1) c_i)``."""
    return DiagonalPresentation(tuple(Generator(f"c{i}", i, q**i - 1) for i in range(2, n + 1)))


def component_closed_form(P: DiagonalPresentation, d: int) -> AbelianGroupType:
    """Degree-``d`` group of a diagonal presentation by the gcd-per-monomial rule."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return AbelianGroupType((0,))
    if not P.generators:
        return AbelianGroupType()
    ann = P.annihilators
    orders = []
    for m in monomials_of_weighted_degree(P.grading, d):
        g = 0
        for i, e in enumerate(m):
            if e:
                g = gcd(g, ann[i])
        orders.append(g)
    return AbelianGroupType(tuple(orders))


def closed_form_table(P: DiagonalPresentation, D: int = DEFAULT_CUTOFF) -> GradedTable:
    return GradedTable(tuple(component_closed_form(P, d) for d in range(D + 1)))


def slice_relations(
    grading: Sequence[int], ideal_generators: Iterable[IntPolynomial], d: int
) -> tuple[list[tuple[int, ...]], list[list[int]]]:
    """Monomial basis of the degree-``d`` slice and the spanning relation rows.

    Rows are ``mu * g`` for every ideal generator ``g`` of degree at most
    ``d`` and every monomial ``mu`` of the complementary degree.
    """
    grading = tuple(grading)
    basis = monomials_of_weighted_degree(grading, d)
    index = {m: i for i, m in enumerate(basis)}
    rows: list[list[int]] = []
    for g in ideal_generators:
        if g.grading != grading:
            raise ValueError(f"generator {g} lives in a ring with grading {g.grading}")
        if not g:
            continue
        if not g.is_homogeneous():
            raise ValueError(f"ideal generator {g} is not homogeneous")
        k = g.degree()
        if k > d:
            continue
        for mu in monomials_of_weighted_degree(grading, d - k):
            row = [0] * len(basis)
            for m, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(m, mu))]] += c
            rows.append(row)
    return basis, rows


def component_oracle(
    grading: Sequence[int], ideal_generators: Sequence[IntPolynomial], d: int
) -> AbelianGroupType:
    """Degree-``d`` slice of ``Z[g]/I`` by Smith normal form of the spanning rows."""
    basis, rows = slice_relations(grading, ideal_generators, d)
    return cokernel(len(basis), IntMatrix.from_rows(rows, len(basis)))


def oracle_table(
    grading: Sequence[int], ideal_generators: Sequence[IntPolynomial], D: int = DEFAULT_CUTOFF
) -> GradedTable:
    gens = list(ideal_generators)
    return GradedTable(tuple(component_oracle(grading, gens, d) for d in range(D + 1)))


def reduce_mod_l(P: DiagonalPresentation, l: int) -> tuple[str, ...]:
    """Generators that stay free after reducing modulo the prime ``l``."""
    check_primes([l])
    return tuple(g.name for g in P.generators if g.annihilator % l == 0)


def hilbert_mod_l(P: DiagonalPresentation, l: int, d: int) -> int:
    """``Z/l``-dimension of the degree-``d`` slice of ``P / l``."""
    survivors = set(reduce_mod_l(P, l))
    grading = tuple(g.degree for g in P.generators if g.name in survivors)
    if not grading:
        return int(d == 0)
    return len(monomials_of_weighted_degree(grading, d))


def mod_l_dimension_oracle(
    grading: Sequence[int], ideal_generators: Sequence[IntPolynomial], l: int, d: int
) -> int:
    """``dim_{Z/l}`` of the degree-``d`` slice of ``Z[g]/I (x) Z/l``.

    Counts the basis minus the rank of the relation rows over ``Z/l``;
    no Smith form involved.
    """
    check_primes([l])
    basis, rows = slice_relations(grading, ideal_generators, d)
    if not rows:
        return len(basis)
    return len(basis) - rank_mod_p(IntMatrix.from_rows(rows, len(basis)), l)


def _free_part(m: int, S) -> int:
    if m == 0:
        return 0
    for p in S:
        while m % p == 0:
            m //= p
    return m


def localize_presentation(P: DiagonalPresentation, S: Iterable[int]) -> DiagonalPresentation:
    """Invert the primes ``S`` in every annihilator.

    Generators are kept even when their annihilator becomes 1, so the
    presentation stays aligned with the unlocalized one.
    """
    S = check_primes(S)
    if not S:
        raise ValueError("localization needs at least one prime")
    return DiagonalPresentation(
        tuple(Generator(g.name, g.degree, _free_part(g.annihilator, S)) for g in P.generators)
    )


def localize_table(T: GradedTable, S: Iterable[int]) -> GradedTable:
    S = check_primes(S)
    return GradedTable(tuple(localize(G, S) for G in T))
