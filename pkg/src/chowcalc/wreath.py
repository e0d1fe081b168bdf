"""Totaro's functor ``F_l`` on based graded abelian groups.

Let ``A = sum_i Z/a_i e_i`` with every ``a_i`` zero or a prime power and let
``R`` be the indices with ``deg e_i > 0`` and ``a_i`` zero or a power of
``l``.  Then ``F_l(A)`` is free on

* one tensor class ``e_{i_1} (x) .. (x) e_{i_l}`` per rotation orbit of
  ``{1..n}^l`` minus the diagonal tuples over ``R``, of order
  ``gcd(a_{i_1}, .., a_{i_l})``,
* ``gamma(e_i)`` in degree ``l deg e_i`` of order ``l a_i``, ``i in R``,
* ``alpha^j(e_i) = c_1^(l deg e_i - j) gamma(e_i)`` of order ``l`` for
  ``deg e_i < j < l deg e_i``, ``i in R``.

Groups are graded by dimension there.  Classifying spaces are graded by
codimension, so :func:`stable_f_l` places a codimension-``c`` class in
dimension ``N - c`` of a formal approximation of dimension ``N``, applies
``F_l`` and reads the result back in codimension ``lN - j``, keeping
codimensions below the cutoff.  The output does not depend on ``N`` once
``N`` is at least the cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from sympy import factorint

from .abelian import AbelianGroupType, check_primes, direct_sum, tensor
from .presentations import GradedTable

__all__ = [
    "Atom",
    "Tensor",
    "Gamma",
    "Alpha",
    "UNIT",
    "BasedElement",
    "WreathBasis",
    "r_set",
    "cyclic_orbits",
    "f_l",
    "f_l_cardinality",
    "check_gamma_relations",
    "cyclic_group_basis",
    "stable_f_l",
    "iterate_tower",
    "unit_table",
    "kunneth_tensor",
]


# --------------------------------------------------------------------------
# labels


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Tensor:
    factors: tuple

    def __str__(self):
        return "<" + ",".join(map(str, self.factors)) + ">"


@dataclass(frozen=True)
class Gamma:
    source: object

    def __str__(self):
        return f"g({self.source})"


@dataclass(frozen=True)
class Alpha:
    """``c_1^shift * gamma(source)``."""

    source: object
    shift: int

    def __str__(self):
        t = "t" if self.shift == 1 else f"t^{self.shift}"
        return f"{t}*g({self.source})"


UNIT = Atom("1")


def _t_power(k: int) -> Atom:
    return Atom("t" if k == 1 else f"t^{k}")


def _is_prime_power(a: int) -> bool:
    return a >= 2 and len(factorint(a)) == 1


def _is_power_of(a: int, l: int) -> bool:
    if a < 1:
        return False
    while a % l == 0:
        a //= l
    return a == 1


@dataclass(frozen=True)
class BasedElement:
    label: object
    degree: int
    order: int

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"{self.label}: negative degree")
        if self.order < 0:
            raise ValueError(f"{self.label}: negative order")

    def __str__(self):
        o = "Z" if self.order == 0 else f"Z/{self.order}"
        return f"{self.label} [{self.degree}] {o}"


@dataclass(frozen=True)
class WreathBasis:
    """Based graded group; degrees are dimensions or codimensions."""

    elements: tuple[BasedElement, ...]
    grading_mode: str = "dimension"
    cutoff: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if self.grading_mode not in ("dimension", "codimension"):
            raise ValueError(f"unknown grading mode {self.grading_mode!r}")
        labels = [e.label for e in self.elements]
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be unique")
        if self.grading_mode == "codimension":
            if self.cutoff is None:
                raise ValueError("codimension mode needs a cutoff")
            for e in self.elements:
                if e.degree >= self.cutoff:
                    raise ValueError(f"{e.label} has codimension {e.degree} >= cutoff {self.cutoff}")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def by_label(self) -> dict:
        return {e.label: e for e in self.elements}

    def to_table(self, max_degree: int | None = None) -> GradedTable:
        """Direct sum of the cyclic summands in each degree."""
        if max_degree is None:
            if self.grading_mode == "codimension":
                max_degree = self.cutoff - 1
            else:
                max_degree = max((e.degree for e in self.elements), default=0)
        orders: list[list[int]] = [[] for _ in range(max_degree + 1)]
        for e in self.elements:
            if e.degree <= max_degree:
                orders[e.degree].append(e.order)
        return GradedTable(tuple(AbelianGroupType(tuple(o)) for o in orders))


def _check_hypothesis(B: WreathBasis):
    for e in B.elements:
        if e.order != 0 and not _is_prime_power(e.order):
            raise ValueError(
                f"{e.label} has order {e.order}; orders must be 0 or prime powers"
            )


def r_set(B: WreathBasis, l: int) -> tuple[int, ...]:
    """Indices with positive degree and order 0 or a power of ``l``."""
    if B.grading_mode != "dimension":
        raise ValueError("r_set is defined on dimension-graded bases")
    check_primes([l])
    return tuple(
        i for i, e in enumerate(B.elements)
        if e.degree > 0 and (e.order == 0 or _is_power_of(e.order, l))
    )


def _canonical_rotation(t: tuple) -> tuple:
    return min(t[k:] + t[:k] for k in range(len(t)))


def _orbit(rep: tuple) -> tuple[tuple, ...]:
    seen = []
    for k in range(len(rep)):
        r = rep[k:] + rep[:k]
        if r not in seen:
            seen.append(r)
    return tuple(seen)


def cyclic_orbits(
    n: int,
    l: int,
    excluded_diagonal: Iterable[int] = (),
    weights: Sequence[int] | None = None,
    budget: int | None = None,
) -> list[tuple[tuple[int, ...], ...]]:
    """Rotation orbits of ``{0..n-1}^l`` minus the excluded constant tuples.

    Each orbit lists its members, the lexicographically least rotation
    first; orbits come in lexicographic order of that representative.
    With ``weights`` and ``budget`` only tuples of total weight at most
    ``budget`` are produced (weights must be nonnegative).
    """
    excluded = set(excluded_diagonal)
    if weights is None:
        weights = (0,) * n
        budget = 0
    elif budget is None:
        raise ValueError("weights need a budget")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    out = []

    def rec(prefix: list[int], used: int):
        if len(prefix) == l:
            t = tuple(prefix)
            if _canonical_rotation(t) != t:
                return
            if all(x == t[0] for x in t) and t[0] in excluded:
                return
            out.append(_orbit(t))
            return
        # a canonical representative never has an entry below its first
        lo = prefix[0] if prefix else 0
        for i in range(lo, n):
            w = used + weights[i]
            if w <= budget:
                prefix.append(i)
                rec(prefix, w)
                prefix.pop()

    if l >= 1:
        rec([], 0)
    return out


def _tensor_order(orders: Iterable[int]) -> int:
    g = 0
    for a in orders:
        g = gcd(g, a)
    return g


def f_l(B: WreathBasis, l: int, truncate_below: int | None = None) -> WreathBasis:
    """``F_l(B)`` for a dimension-graded basis.

    With ``truncate_below`` only classes of degree greater than it are
    produced (the subgroup ``F_l^{<r}`` for ``truncate_below = l dim - r``).
    """
    if B.grading_mode != "dimension":
        raise ValueError("f_l needs a dimension-graded basis")
    check_primes([l])
    _check_hypothesis(B)
    els = B.elements
    R = r_set(B, l)
    out: list[BasedElement] = []
    keep = (lambda d: True) if truncate_below is None else (lambda d: d > truncate_below)

    if truncate_below is None or not els:
        orbits = cyclic_orbits(len(els), l, R)
    else:
        top = max(e.degree for e in els)
        weights = [top - e.degree for e in els]
        orbits = cyclic_orbits(len(els), l, R, weights, l * top - truncate_below - 1)
    for orbit in orbits:
        rep = orbit[0]
        deg = sum(els[i].degree for i in rep)
        order = _tensor_order(els[i].order for i in rep)
        if order != 1 and keep(deg):
            out.append(BasedElement(Tensor(tuple(els[i].label for i in rep)), deg, order))
    for i in R:
        e = els[i]
        if keep(l * e.degree):
            out.append(BasedElement(Gamma(e.label), l * e.degree, l * e.order))
    for i in R:
        e = els[i]
        for j in range(e.degree + 1, l * e.degree):
            if keep(j):
                out.append(BasedElement(Alpha(e.label, l * e.degree - j), j, l))
    return WreathBasis(tuple(out), "dimension")


def f_l_cardinality(B: WreathBasis, l: int) -> int:
    """``#orbits + |R| + sum_{i in R} (l deg e_i - deg e_i - 1)``."""
    R = r_set(B, l)
    n = len(B.elements)
    orbits = len(cyclic_orbits(n, l, R))
    return orbits + len(R) + sum(l * B.elements[i].degree - B.elements[i].degree - 1 for i in R)


def check_gamma_relations(B: WreathBasis, l: int) -> bool:
    """Order bookkeeping behind ``l gamma(x) = x^(x)l`` and the sum formula.

    For ``i in R`` with ``a_i = l^s > 1``, ``gamma(e_i)`` must have order
    ``l a_i``, so ``l gamma(e_i)`` has order ``a_i`` like the norm class of
    ``e_i^(x)l``.  For every pair of classes in ``R`` the correction terms
    of ``gamma(x + y)`` are the non-constant orbits of ``{x, y}^l``, of
    which there are ``(2^l - 2)/l``.
    """
    F = f_l(B, l).by_label()
    R = r_set(B, l)
    for i in R:
        e = B.elements[i]
        if e.order > 1:
            g = F.get(Gamma(e.label))
            if g is None or g.order != l * e.order:
                return False
            if g.order // gcd(g.order, l) != _tensor_order([e.order] * l):
                return False
    if len(R) >= 2:
        sub = WreathBasis(tuple(B.elements[i] for i in R[:2]))
        corrections = [
            o for o in cyclic_orbits(2, l, r_set(sub, l)) if len(set(o[0])) > 1
        ]
        if len(corrections) != (2**l - 2) // l:
            return False
        tensors = [
            e for e in f_l(sub, l).elements
            if isinstance(e.label, Tensor) and len(set(e.label.factors)) > 1
        ]
        if len(tensors) != len(corrections):
            return False
    return True


# --------------------------------------------------------------------------
# codimension-graded (classifying space) version


def cyclic_group_basis(order: int, D: int, name: str = "t") -> WreathBasis:
    """``Z[t]/(order t)`` through codimension ``D - 1``."""
    if order < 2:
        raise ValueError("cyclic group order must be at least 2")
    els = [BasedElement(UNIT, 0, 0)]
    for j in range(1, D):
        els.append(BasedElement(Atom(name if j == 1 else f"{name}^{j}"), j, order))
    return WreathBasis(tuple(els), "codimension", D)


def _relabel(label):
    if label == Gamma(UNIT):
        return UNIT
    if isinstance(label, Alpha) and label.source == UNIT:
        return _t_power(label.shift)
    return label


def stable_f_l(B: WreathBasis, l: int, N: int | None = None) -> WreathBasis:
    """``F_l`` on a codimension-graded basis through its cutoff.

    ``N`` is the dimension of the formal approximation and defaults to the
    cutoff.  ``gamma(1)`` becomes the new unit and ``c_1^k gamma(1)``
    becomes ``t^k``, ``t`` the class of the new cyclic factor.
    """
    if B.grading_mode != "codimension":
        raise ValueError("stable_f_l needs a codimension-graded basis")
    D = B.cutoff
    if N is None:
        N = D
    if N < D:
        raise ValueError(f"stabilization dimension {N} < cutoff {D}")
    units = [e for e in B.elements if e.label == UNIT]
    if not units or units[0].degree != 0 or units[0].order != 0:
        raise ValueError("basis lacks the unit class in codimension 0")
    dim_basis = WreathBasis(
        tuple(BasedElement(e.label, N - e.degree, e.order) for e in B.elements), "dimension"
    )
    F = f_l(dim_basis, l, truncate_below=l * N - D)
    out = []
    for e in F.elements:
        out.append(BasedElement(_relabel(e.label), l * N - e.degree, e.order))
    out.sort(key=lambda e: e.degree)
    return WreathBasis(tuple(out), "codimension", D)


def iterate_tower(l: int, b: int, height: int, D: int, basis: bool = False):
    """Table of the model for ``Z/l wr .. wr Z/l wr Z/l^b`` (``height`` wreaths).

    Starts from ``Z[t]/(l^b t)`` truncated below codimension ``D``; with
    ``basis=True`` the final :class:`WreathBasis` is returned instead.
    """
    check_primes([l])
    if b < 1 or height < 0 or D < 1:
        raise ValueError("need b >= 1, height >= 0, D >= 1")
    B = cyclic_group_basis(l**b, D)
    for _ in range(height):
        B = stable_f_l(B, l)
    return B if basis else B.to_table()


def unit_table(D: int) -> GradedTable:
    """Table of a point: ``Z`` in degree 0, degrees ``0..D-1``."""
    return GradedTable((AbelianGroupType((0,)),) + (AbelianGroupType(),) * (D - 1))


def kunneth_tensor(A: GradedTable, B: GradedTable, D: int) -> GradedTable:
    """``(A (x) B)_d = sum_{r+s=d} A_r (x) B_s`` for ``d < D``; no Tor terms."""
    if len(A) < D or len(B) < D:
        raise ValueError(f"tables must reach degree {D - 1}")
    comps = []
    for d in range(D):
        comps.append(direct_sum(*(tensor(A[r], B[d - r]) for r in range(d + 1))))
    return GradedTable(tuple(comps))
