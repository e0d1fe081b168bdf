"""Weyl group invariants of GL_n, SL_n and Sp_2m in torus coordinates.

Torus variables have degree 1.  For GL_n and SL_n the fundamental
invariants are the elementary symmetric polynomials; for Sp_2m they are the
elementary symmetric polynomials in the squares ``x_i^2``.  SL_n reuses the
GL_n torus and imposes ``e_1 = 0`` by adjoining ``e_1`` to every ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .polyring import IntPolynomial, substitute

__all__ = [
    "GroupKind",
    "GL",
    "SL",
    "Sp",
    "WeylData",
    "weyl_data",
    "fundamental_degrees",
    "elementary_symmetric",
    "invariant_generator",
    "invariant_generators",
    "check_invariance",
    "levi_ring",
    "levi_block_invariants",
    "levi_elementary_expansion",
]


@dataclass(frozen=True)
class GroupKind:
    family: str  # "gl", "sl" or "sp"
    size: int  # n for GL/SL, m for Sp_2m

    def __post_init__(self):
        fam = self.family.lower()
        object.__setattr__(self, "family", fam)
        if fam not in ("gl", "sl", "sp"):
            raise ValueError(f"unknown group family {self.family!r}")
        minimum = {"gl": 1, "sl": 2, "sp": 1}[fam]
        if self.size < minimum:
            raise ValueError(f"{fam.upper()} needs size >= {minimum}, got {self.size}")

    @property
    def rank(self) -> int:
        """Number of torus variables used."""
        return self.size

    def __str__(self):
        if self.family == "sp":
            return f"Sp({2 * self.size})"
        return f"{self.family.upper()}({self.size})"


def GL(n: int) -> GroupKind:
    return GroupKind("gl", n)


def SL(n: int) -> GroupKind:
    return GroupKind("sl", n)


def Sp(two_m: int) -> GroupKind:
    """``Sp(4)`` is Sp_4, i.e. ``m = 2``."""
    if two_m % 2:
        raise ValueError("symplectic groups have even dimension")
    return GroupKind("sp", two_m // 2)


def fundamental_degrees(kind: GroupKind) -> tuple[int, ...]:
    n = kind.size
    if kind.family == "gl":
        return tuple(range(1, n + 1))
    if kind.family == "sl":
        return tuple(range(2, n + 1))
    return tuple(range(2, 2 * n + 1, 2))


def _torus_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def elementary_symmetric(k: int, polys: Sequence[IntPolynomial]) -> IntPolynomial:
    ring = polys[0]
    total = IntPolynomial.zero(ring.grading, ring.names)
    for combo in combinations(polys, k):
        term = IntPolynomial.constant(1, ring.grading, ring.names)
        for p in combo:
            term = term * p
        total = total + term
    return total


def invariant_generator(kind: GroupKind, i: int) -> IntPolynomial:
    """The ``i``-th fundamental invariant, ``1 <= i <= len(fundamental_degrees)``.

    For SL the indexing follows the degrees, so ``i = 1`` is ``e_2``.
    """
    degs = fundamental_degrees(kind)
    if not 1 <= i <= len(degs):
        raise ValueError(f"{kind} has {len(degs)} fundamental invariants, index {i} invalid")
    n = kind.size
    xs = IntPolynomial.variables((1,) * n, _torus_names(n))
    if kind.family == "sp":
        return elementary_symmetric(i, [x * x for x in xs])
    return elementary_symmetric(degs[i - 1], xs)


def invariant_generators(kind: GroupKind) -> list[IntPolynomial]:
    return [invariant_generator(kind, i) for i in range(1, len(fundamental_degrees(kind)) + 1)]


@dataclass(frozen=True)
class WeylData:
    kind: GroupKind
    rank: int
    fundamental_degrees: tuple[int, ...]
    action_generators: tuple[tuple[IntPolynomial, ...], ...]


def weyl_data(kind: GroupKind) -> WeylData:
    """Generators of the Weyl group as substitutions of the torus variables.

    Adjacent transpositions, plus the sign change of ``x_1`` for Sp.
    """
    n = kind.size
    xs = IntPolynomial.variables((1,) * n, _torus_names(n))
    gens = []
    for i in range(n - 1):
        img = list(xs)
        img[i], img[i + 1] = xs[i + 1], xs[i]
        gens.append(tuple(img))
    if kind.family == "sp":
        img = list(xs)
        img[0] = -xs[0]
        gens.append(tuple(img))
    return WeylData(kind, n, fundamental_degrees(kind), tuple(gens))


def check_invariance(f: IntPolynomial, W: WeylData) -> bool:
    return all(substitute(f, images) == f for images in W.action_generators)


# --------------------------------------------------------------------------
# block Levi subgroups of GL_n


def levi_ring(blocks: Sequence[int]) -> tuple[tuple[int, ...], tuple[str, ...]]:
    """Grading and names of ``Z[e_j^(b)]``, the invariants of a block Levi.

    Generators are ordered block by block, ``e_1^(b), .., e_{n_b}^(b)``.
    """
    blocks = tuple(blocks)
    if not blocks or any(b < 1 for b in blocks):
        raise ValueError(f"invalid block sizes {blocks}")
    grading = tuple(j for b in blocks for j in range(1, b + 1))
    names = tuple(f"e{j}_{k + 1}" for k, b in enumerate(blocks) for j in range(1, b + 1))
    return grading, names


def levi_block_invariants(blocks: Sequence[int]) -> list[IntPolynomial]:
    """Each block generator ``e_j^(b)`` written in GL torus variables."""
    n = sum(blocks)
    xs = IntPolynomial.variables((1,) * n, _torus_names(n))
    out = []
    start = 0
    for b in blocks:
        block = xs[start:start + b]
        out.extend(elementary_symmetric(j, block) for j in range(1, b + 1))
        start += b
    return out


def levi_elementary_expansion(k: int, blocks: Sequence[int]) -> IntPolynomial:
    """``e_k`` of all variables as a polynomial in the block invariants.

    ``e_k = sum over k_1 + .. + k_s = k, 0 <= k_b <= n_b, of prod_b e_{k_b}^(b)``.
    """
    blocks = tuple(blocks)
    grading, names = levi_ring(blocks)
    n = sum(blocks)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range 0..{n}")
    offsets = []
    pos = 0
    for b in blocks:
        offsets.append(pos)
        pos += b
    terms: dict[tuple[int, ...], int] = {}
    for parts in product(*(range(b + 1) for b in blocks)):
        if sum(parts) != k:
            continue
        m = [0] * len(grading)
        for off, kb in zip(offsets, parts):
            if kb:
                m[off + kb - 1] = 1
        terms[tuple(m)] = terms.get(tuple(m), 0) + 1
    return IntPolynomial(terms, grading, names)
