"""Named verification grids shared by the ``verify`` command and the tests.

Each suite is a generator of ``(case, passed)`` pairs.
"""

from __future__ import annotations

from typing import Callable, Iterator

from sympy import primerange

from .chevalley import (
    ChevalleyQuery,
    check_restriction_embedding,
    chow_BG,
    glq_l_part_order,
    guillot_check,
    sylow_shape,
)
from .invariants import GL, SL, GroupKind, Sp
from .presentations import component_closed_form, component_oracle
from .twisted import verify_ideal_reduction
from .wreath import cyclic_group_basis, stable_f_l

Case = tuple[str, bool]

PRESENTATION_QS = (2, 3, 4, 5, 8, 9)
SMALL_QS = (2, 3, 4)
ODD_PRIMES_TO_13 = tuple(primerange(3, 14))
EMBEDDING_CASES = ((2, 2, 3), (3, 2, 7), (4, 2, 3), (6, 2, 3), (2, 4, 3))


def presentation_kinds() -> list[GroupKind]:
    return (
        [GL(n) for n in range(1, 7)]
        + [Sp(2 * m) for m in range(1, 5)]
        + [SL(n) for n in range(2, 7)]
    )


def oracle_suite(max_degree: int = 8) -> Iterator[Case]:
    for kind in presentation_kinds():
        for q in PRESENTATION_QS:
            P, _ = chow_BG(ChevalleyQuery(kind, q, 0))
            rels = P.ideal_generators()
            ok = all(
                component_closed_form(P, d) == component_oracle(P.grading, rels, d)
                for d in range(max_degree + 1)
            )
            yield f"{kind} q={q} d<={max_degree}", ok


def reduction_suite(D: int = 8) -> Iterator[Case]:
    kinds = [GL(1), GL(2), GL(3), Sp(4), SL(3)]
    for kind in kinds:
        for q in SMALL_QS:
            yield f"{kind} q={q} D={D}", verify_ideal_reduction(kind, q, D)


def stability_suite(max_cutoff: int = 8) -> Iterator[Case]:
    for l in (2, 3):
        for b in (1, 2):
            for D in range(1, max_cutoff + 1):
                B = cyclic_group_basis(l**b, D)
                outs = [stable_f_l(B, l, N) for N in (D, D + 1, D + 5)]
                ok = all(set(o.elements) == set(outs[0].elements) for o in outs[1:])
                ok = ok and all(o.to_table() == outs[0].to_table() for o in outs[1:])
                yield f"l={l} b={b} D={D}", ok


def _sylow_grid(n_max: int) -> Iterator[tuple[int, int, int]]:
    for n in range(1, n_max + 1):
        for q in SMALL_QS:
            for l in ODD_PRIMES_TO_13:
                if q % l:
                    yield n, q, l


def guillot_suite(D: int = 10) -> Iterator[Case]:
    for n, q, l in _sylow_grid(5):
        yield f"n={n} q={q} l={l} D={D}", guillot_check(n, q, l, D)


def embedding_suite(D: int = 6) -> Iterator[Case]:
    for n, q, l in EMBEDDING_CASES:
        yield f"n={n} q={q} l={l} D={D}", check_restriction_embedding(n, q, l, D)


def orders_suite(n_max: int = 8) -> Iterator[Case]:
    for n, q, l in _sylow_grid(n_max):
        shape = sylow_shape(n, q, l)
        want = glq_l_part_order(n, q, l)
        yield f"n={n} q={q} l={l}: {shape.order_exponent} = {want}", shape.order_exponent == want


SUITES: dict[str, Callable[[], Iterator[Case]]] = {
    "oracle": oracle_suite,
    "reduction": reduction_suite,
    "stability": stability_suite,
    "guillot": guillot_suite,
    "embedding": embedding_suite,
    "orders": orders_suite,
}
