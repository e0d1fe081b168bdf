"""Finitely generated abelian groups and exact integer linear algebra.

Groups are stored in invariant-factor form: a tuple ``d_1 | d_2 | ... | d_k``
of nonzero factors followed by zeros, where ``0`` stands for an infinite
cyclic summand and factors equal to ``1`` never appear.

>>> AbelianGroupType((2, 3, 0, 4))
AbelianGroupType(factors=(2, 12, 0))
>>> print(cokernel(2, [[2, 2]]))
Z/2 + Z
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from sympy import isprime

__all__ = [
    "IntMatrix",
    "AbelianGroupType",
    "TRIVIAL",
    "smith_normal_form",
    "cokernel",
    "hermite_normal_form",
    "hermite_slice_equal",
    "rank_mod_p",
    "direct_sum",
    "tensor",
    "tor",
    "localize",
    "primary_part",
    "embeds",
    "valuation",
    "check_primes",
]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix without rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError(f"ragged row of length {len(r)}, expected {cols}")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]


def _as_matrix(M, cols: int | None = None) -> IntMatrix:
    if isinstance(M, IntMatrix):
        if cols is not None and M.cols != cols:
            raise ValueError(f"expected {cols} columns, got {M.cols}")
        return M
    return IntMatrix.from_rows(M, cols)


def _normalize(orders: Iterable[int]) -> tuple[int, ...]:
    finite = []
    zeros = 0
    for a in orders:
        a = int(a)
        if a < 0:
            a = -a
        if a == 0:
            zeros += 1
        elif a != 1:
            finite.append(a)
    # pairwise (gcd, lcm) sweeps turn any list of orders into a divisibility
    # chain without factoring
    finite.sort()
    for i in range(len(finite)):
        for j in range(i + 1, len(finite)):
            a, b = finite[i], finite[j]
            g = gcd(a, b)
            finite[i], finite[j] = g, a // g * b
    return tuple(a for a in finite if a != 1) + (0,) * zeros


@dataclass(frozen=True)
class AbelianGroupType:
    """A finitely generated abelian group ``Z/d_1 + ... + Z/d_k``.

    Any sequence of cyclic orders is accepted and brought into canonical
    invariant-factor form, so equality of values is group isomorphism.
    """

    factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", _normalize(self.factors))

    @property
    def rank(self) -> int:
        return self.factors.count(0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(a for a in self.factors if a)

    def is_finite(self) -> bool:
        return self.rank == 0

    def order(self) -> int:
        """Group order; raises for infinite groups."""
        if not self.is_finite():
            raise ValueError("group is infinite")
        n = 1
        for a in self.factors:
            n *= a
        return n

    def __bool__(self):
        return bool(self.factors)

    def __str__(self):
        if not self.factors:
            return "0"
        return " + ".join("Z" if a == 0 else f"Z/{a}" for a in self.factors)


TRIVIAL = AbelianGroupType(())


def check_primes(primes: Iterable[int]) -> frozenset[int]:
    primes = frozenset(int(p) for p in primes)
    for p in primes:
        if not isprime(p):
            raise ValueError(f"{p} is not a prime")
    return primes


def valuation(m: int, l: int) -> int:
    """Largest ``e`` with ``l**e | m`` (``m`` nonzero)."""
    if m == 0:
        raise ValueError("valuation of 0 is infinite")
    if l < 2:
        raise ValueError("base must be at least 2")
    m = abs(m)
    e = 0
    while m % l == 0:
        m //= l
        e += 1
    return e


# --------------------------------------------------------------------------
# normal forms


def _min_abs_position(A, t, rows, cols):
    best = None
    for i in range(t, rows):
        row = A[i]
        for j in range(t, cols):
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(M) -> tuple[int, ...]:
    """Diagonal of the Smith normal form, ``min(rows, cols)`` entries.

    >>> smith_normal_form([[2, 4], [6, 8]])
    (2, 4)
    """
    M = _as_matrix(M)
    rows, cols = M.rows, M.cols
    A = M.to_rows()
    k = min(rows, cols)
    out = []
    t = 0
    while t < k:
        best = _min_abs_position(A, t, rows, cols)
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        if j != t:
            for r in A:
                r[t], r[j] = r[j], r[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, rows):
                v = A[i][t]
                if v:
                    qt = v // p
                    if qt:
                        ri, rt = A[i], A[t]
                        for c in range(t, cols):
                            ri[c] -= qt * rt[c]
                    if A[i][t]:
                        dirty = True
            rt = A[t]
            for j in range(t + 1, cols):
                v = rt[j]
                if v:
                    qt = v // p
                    if qt:
                        for r in range(t, rows):
                            A[r][j] -= qt * A[r][t]
                    if rt[j]:
                        dirty = True
            if dirty:
                # a smaller remainder appeared in the pivot row or column
                best = None
                for i in range(t, rows):
                    v = A[i][t]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, t)
                for j in range(t, cols):
                    v = A[t][j]
                    if v and abs(v) < best[0]:
                        best = (abs(v), t, j)
                _, i, j = best
                A[t], A[i] = A[i], A[t]
                if j != t:
                    for r in A:
                        r[t], r[j] = r[j], r[t]
                continue
            bad = None
            for i in range(t + 1, rows):
                ri = A[i]
                for j in range(t + 1, cols):
                    if ri[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            rt, rb = A[t], A[bad]
            for c in range(t, cols):
                rt[c] += rb[c]
        out.append(abs(A[t][t]))
        t += 1
    out.extend([0] * (k - len(out)))
    return tuple(out)


def cokernel(generator_count: int, relations) -> AbelianGroupType:
    """``Z^generator_count`` modulo the row span of ``relations``."""
    R = _as_matrix(relations, generator_count)
    if R.rows == 0 or generator_count == 0:
        return AbelianGroupType((0,) * generator_count)
    diag = smith_normal_form(R)
    nonzero = [d for d in diag if d]
    return AbelianGroupType(tuple(nonzero) + (0,) * (generator_count - len(nonzero)))


def hermite_normal_form(M) -> tuple[tuple[int, ...], ...]:
    """Row-style Hermite normal form with zero rows dropped.

    Pivots are positive and every entry above a pivot lies in
    ``[0, pivot)``, so two matrices have the same row lattice exactly when
    their forms coincide.
    """
    M = _as_matrix(M)
    rows = [r for r in M.to_rows() if any(r)]
    cols = M.cols
    done: list[list[int]] = []
    pivots: list[int] = []
    for c in range(cols):
        active = [r for r in rows if r[c]]
        if not active:
            continue
        rest = [r for r in rows if not r[c]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[c]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                qt = r[c] // piv[c]
                r = [x - qt * y for x, y in zip(r, piv)]
                if r[c]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        piv = active[0]
        if piv[c] < 0:
            piv = [-x for x in piv]
        for k, (r, pc) in enumerate(zip(done, pivots)):
            qt = r[c] // piv[c]
            if qt:
                done[k] = [x - qt * y for x, y in zip(r, piv)]
        done.append(piv)
        pivots.append(c)
        rows = rest
    return tuple(tuple(r) for r in done)


def hermite_slice_equal(A, B) -> bool:
    """Whether two integer matrices have the same row lattice."""
    A = _as_matrix(A)
    B = _as_matrix(B, A.cols)
    return hermite_normal_form(A) == hermite_normal_form(B)


def rank_mod_p(M, p: int) -> int:
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    M = _as_matrix(M)
    A = [[x % p for x in r] for r in M.to_rows()]
    rank = 0
    for c in range(M.cols):
        piv = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], -1, p)
        A[rank] = [x * inv % p for x in A[rank]]
        for i in range(len(A)):
            if i != rank and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


# --------------------------------------------------------------------------
# group constructions


def direct_sum(*groups: AbelianGroupType) -> AbelianGroupType:
    return AbelianGroupType(tuple(a for G in groups for a in G.factors))


def tensor(A: AbelianGroupType, B: AbelianGroupType) -> AbelianGroupType:
    """Summand-wise ``Z/a (x) Z/b = Z/gcd(a, b)``; ``gcd(0, b) = b``."""
    return AbelianGroupType(tuple(gcd(a, b) for a in A.factors for b in B.factors))


def tor(A: AbelianGroupType, B: AbelianGroupType) -> AbelianGroupType:
    return AbelianGroupType(
        tuple(gcd(a, b) for a in A.factors for b in B.factors if a and b)
    )


def _strip(m: int, primes: Iterable[int]) -> int:
    for p in primes:
        while m % p == 0:
            m //= p
    return m


def localize(A: AbelianGroupType, S: Iterable[int]) -> AbelianGroupType:
    """Invert the primes in ``S``: finite factors lose their ``S``-parts.

    >>> localize(AbelianGroupType((80,)), {2, 3})
    AbelianGroupType(factors=(5,))
    """
    S = check_primes(S)
    if not S:
        raise ValueError("localization needs at least one prime")
    return AbelianGroupType(tuple(_strip(a, S) if a else 0 for a in A.factors))


def primary_part(A: AbelianGroupType, l: int) -> AbelianGroupType:
    """Localization at the prime ``l``: keep the ``l``-part of each factor."""
    check_primes([l])
    return AbelianGroupType(tuple(l ** valuation(a, l) if a else 0 for a in A.factors))


def _exponents(A: AbelianGroupType, l: int, strict: bool) -> list[float]:
    out: list[float] = []
    for a in A.factors:
        if a == 0:
            out.append(float("inf"))
            continue
        e = valuation(a, l)
        if strict and l ** e != a:
            raise ValueError(f"factor {a} of {A} is not a power of {l}")
        out.append(e)
    return out


def embeds(A: AbelianGroupType, B: AbelianGroupType, l: int) -> bool:
    """Whether the abelian ``l``-group ``A`` embeds in ``B`` localized at ``l``.

    Infinite cyclic summands of ``B`` count as divisible by every power of
    ``l``, and so do those of ``A``, which therefore need a partner in ``B``.
    """
    check_primes([l])
    ea = _exponents(A, l, strict=True)
    eb = _exponents(B, l, strict=False)
    levels = sorted({e for e in ea if e >= 1})
    for k in levels:
        if sum(e >= k for e in ea) > sum(e >= k for e in eb):
            return False
    return True
