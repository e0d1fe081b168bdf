"""Chow rings of BG(F_q) for G = GL_n, Sp_2m, SL_n and their consistency checks.

Over a field containing ``F_q`` the rings are ``R_1(n,q)``, ``R_2(m,q)``
and ``R_3(n,q)``.  Over the complex numbers they agree after inverting
``2p`` (GL, Sp), only ``p`` if ``q = 1 mod 4``, and ``p`` together with
the prime divisors of ``q - 1`` for SL.

The l-local side uses Sylow subgroups of GL_n(F_q) for odd ``l`` not
dividing ``q``: with ``r`` the order of ``q`` mod ``l``, ``b = v_l(q^r - 1)``
and ``floor(n / r) = sum a_i l^i``, the Sylow subgroup is a product of
``a_i`` copies of the tower ``Z/l wr .. wr Z/l wr Z/l^b`` with ``i`` wreaths.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from sympy import primefactors

from .abelian import check_primes, embeds, primary_part, valuation
from .invariants import GroupKind
from .polyring import monomials_of_weighted_degree
from .presentations import (
    DEFAULT_CUTOFF,
    DiagonalPresentation,
    Generator,
    GradedTable,
    R1,
    component_closed_form,
    hilbert_mod_l,
    localize_presentation,
    localize_table,
    reduce_mod_l,
)
from .twisted import check_prime_power, twisted_coinvariants
from .wreath import iterate_tower, kunneth_tensor, unit_table

__all__ = [
    "ChevalleyQuery",
    "SylowShape",
    "chow_BG",
    "required_inversions",
    "theorem_a",
    "mult_order",
    "l_valuation",
    "sylow_shape",
    "glq_l_part_order",
    "sylow_chow_model",
    "check_restriction_embedding",
    "guillot_check",
    "elementary_abelian_char0",
]


@dataclass(frozen=True)
class ChevalleyQuery:
    kind: GroupKind
    q: int
    cutoff: int = DEFAULT_CUTOFF
    inverted: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        check_prime_power(self.q)
        if self.cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        object.__setattr__(self, "inverted", check_primes(self.inverted))

    @property
    def p(self) -> int:
        return check_prime_power(self.q)


def chow_BG(query: ChevalleyQuery) -> tuple[DiagonalPresentation, GradedTable]:
    """``A^* B G(F_q)`` over a field containing ``F_q``: presentation and table."""
    if query.inverted:
        raise ValueError("chow_BG takes no inverted primes; use theorem_a")
    return twisted_coinvariants(query.kind, query.q, query.cutoff)


def required_inversions(kind: GroupKind, q: int) -> frozenset[int]:
    """Smallest set of primes for which the complex and F_q-bar rings agree."""
    p = check_prime_power(q)
    if kind.family == "sl":
        return frozenset({p, *primefactors(q - 1)})
    if q % 4 == 1:
        return frozenset({p})
    return frozenset({2, p})


def theorem_a(query: ChevalleyQuery) -> tuple[DiagonalPresentation, GradedTable]:
    """Localized presentation and table of ``A^* B G(F_q)_C``.

    Rejects inverted sets missing a required prime; extra primes are
    allowed with a warning.
    """
    need = required_inversions(query.kind, query.q)
    missing = need - query.inverted
    if missing:
        raise ValueError(
            f"{query.kind} over F_{query.q} needs primes {sorted(need)} inverted; "
            f"missing {sorted(missing)}"
        )
    if query.inverted - need:
        warnings.warn(
            f"inverting {sorted(query.inverted - need)} beyond the required {sorted(need)}",
            stacklevel=2,
        )
    P, T = twisted_coinvariants(query.kind, query.q, query.cutoff)
    return localize_presentation(P, query.inverted), localize_table(T, query.inverted)


# --------------------------------------------------------------------------
# Sylow subgroups


def mult_order(q: int, l: int) -> int:
    """Least ``r >= 1`` with ``q^r = 1 mod l``."""
    check_primes([l])
    if q % l == 0:
        raise ValueError(f"{l} divides {q}")
    r, x = 1, q % l
    while x != 1:
        x = x * q % l
        r += 1
    return r


def l_valuation(m: int, l: int) -> int:
    if m < 1:
        raise ValueError("valuation needs m >= 1")
    return valuation(m, l)


@dataclass(frozen=True)
class SylowShape:
    l: int
    b: int
    towers: tuple[int, ...]

    def __post_init__(self):
        if self.b < 1 or any(h < 0 for h in self.towers):
            raise ValueError("need b >= 1 and nonnegative tower heights")
        object.__setattr__(self, "towers", tuple(sorted(self.towers)))

    def tower_order_exponent(self, height: int) -> int:
        """``log_l`` of ``|Z/l wr .. wr Z/l^b|`` with ``height`` wreaths."""
        e = self.b
        for _ in range(height):
            e = self.l * e + 1
        return e

    @property
    def order_exponent(self) -> int:
        return sum(self.tower_order_exponent(h) for h in self.towers)

    def __str__(self):
        if not self.towers:
            return f"trivial {self.l}-Sylow"
        parts = []
        for h in self.towers:
            base = f"Z/{self.l}^{self.b}" if self.b > 1 else f"Z/{self.l}"
            parts.append(" wr ".join([f"Z/{self.l}"] * h + [base]))
        return " x ".join(f"({p})" for p in parts)


def _check_sylow_prime(q: int, l: int):
    check_primes([l])
    if l == 2:
        raise ValueError("only odd primes l are supported")
    if q % l == 0:
        raise ValueError(f"l = {l} divides q = {q}")


def sylow_shape(n: int, q: int, l: int) -> SylowShape:
    _check_sylow_prime(q, l)
    check_prime_power(q)
    r = mult_order(q, l)
    b = l_valuation(q**r - 1, l)
    m = n // r
    towers = []
    i = 0
    while m:
        m, digit = divmod(m, l)
        towers.extend([i] * digit)
        i += 1
    return SylowShape(l, b, tuple(towers))


def glq_l_part_order(n: int, q: int, l: int) -> int:
    """Exponent of the ``l``-part of ``|GL_n(F_q)|``."""
    check_primes([l])
    if q % l == 0:
        raise ValueError(f"{l} divides {q}")
    return sum(l_valuation(q**i - 1, l) for i in range(1, n + 1))


def sylow_chow_model(shape: SylowShape, D: int) -> GradedTable:
    """Künneth product of the tower models, degrees ``0..D-1``."""
    table = unit_table(D)
    for h in shape.towers:
        table = kunneth_tensor(table, iterate_tower(shape.l, shape.b, h, D), D)
    return table


def check_restriction_embedding(n: int, q: int, l: int, D: int) -> bool:
    """Whether each ``R_1(n,q)_(l)`` degree ``d <= D`` embeds into the Sylow model."""
    _check_sylow_prime(q, l)
    model = sylow_chow_model(sylow_shape(n, q, l), D + 1)
    P = R1(n, q)
    for d in range(D + 1):
        local = primary_part(component_closed_form(P, d), l)
        if not embeds(local, model[d], l):
            return False
    return True


def guillot_check(n: int, q: int, l: int, D: int) -> bool:
    """``R_1(n,q) / l`` is ``Z/l[c_r, c_2r, .., c_mr]`` through degree ``D``."""
    _check_sylow_prime(q, l)
    r = mult_order(q, l)
    m = n // r
    P = R1(n, q)
    expected = tuple(f"c{k * r}" for k in range(1, m + 1))
    if reduce_mod_l(P, l) != expected:
        return False
    grading = tuple(k * r for k in range(1, m + 1))
    for d in range(D + 1):
        want = len(monomials_of_weighted_degree(grading, d)) if grading else int(d == 0)
        if hilbert_mod_l(P, l, d) != want:
            return False
    return True


def elementary_abelian_char0(a: int, p: int) -> DiagonalPresentation:
    """``Z[t_1..t_a]/(p t_i)``, the Chow ring of ``(Z/p)^a`` in characteristic 0.

    In characteristic ``p`` the same group has trivial Chow ring in positive
    degrees, so specialization is not injective for p-Sylow subgroups.
    """
    check_primes([p])
    if a < 1:
        raise ValueError("need a >= 1")
    return DiagonalPresentation(tuple(Generator(f"t{i}", 1, p) for i in range(1, a + 1)))
