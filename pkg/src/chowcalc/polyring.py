"""Sparse multivariate polynomials over Z with a weighted grading.

A polynomial carries its ring: the tuple of generator degrees (and,
optionally, generator names used for printing).  Monomials are exponent
tuples.

>>> x, y = IntPolynomial.variables((1, 1), names=("x", "y"))
>>> print((x + y) * (x - y))
x^2 - y^2
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Monomial",
    "IntPolynomial",
    "weighted_degree",
    "monomials_of_weighted_degree",
    "monomials_up_to_degree",
    "substitute",
]

Monomial = tuple[int, ...]


def weighted_degree(m: Sequence[int], grading: Sequence[int]) -> int:
    if len(m) != len(grading):
        raise ValueError(f"monomial has {len(m)} exponents, ring has {len(grading)} generators")
    return sum(e * d for e, d in zip(m, grading))


def monomials_of_weighted_degree(grading: Sequence[int], d: int) -> list[Monomial]:
    """All exponent vectors of weighted degree ``d``, lexicographically descending.

    >>> monomials_of_weighted_degree((1, 2), 2)
    [(2, 0), (0, 1)]
    """
    grading = tuple(grading)
    if any(g < 1 for g in grading):
        raise ValueError("generator degrees must be positive")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    out: list[Monomial] = []
    n = len(grading)

    def rec(i: int, left: int, prefix: list[int]):
        if i == n - 1:
            if left % grading[i] == 0:
                out.append(tuple(prefix + [left // grading[i]]))
            return
        for e in range(left // grading[i], -1, -1):
            rec(i + 1, left - e * grading[i], prefix + [e])

    if n == 0:
        return [()] if d == 0 else []
    rec(0, d, [])
    return out


def monomials_up_to_degree(grading: Sequence[int], d: int) -> Iterator[Monomial]:
    for k in range(d + 1):
        yield from monomials_of_weighted_degree(grading, k)


def _format_coeff_monomial(c: int, m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for e, name in zip(m, names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    body = "*".join(parts)
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


class IntPolynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("terms", "grading", "names", "_hash")

    def __init__(
        self,
        terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]],
        grading: Sequence[int],
        names: Sequence[str] | None = None,
    ):
        grading = tuple(int(g) for g in grading)
        if any(g < 1 for g in grading):
            raise ValueError("generator degrees must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, int] = {}
        n = len(grading)
        for m, c in items:
            m = tuple(int(e) for e in m)
            if len(m) != n or any(e < 0 for e in m):
                raise ValueError(f"bad monomial {m} for a ring with {n} generators")
            c = clean.get(m, 0) + int(c)
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        self.terms: dict[Monomial, int] = clean
        self.grading = grading
        self.names = tuple(names) if names is not None else tuple(f"x{i + 1}" for i in range(n))
        if len(self.names) != n:
            raise ValueError("one name per generator required")
        self._hash = None

    # -- constructors
    @classmethod
    def zero(cls, grading, names=None) -> IntPolynomial:
        return cls({}, grading, names)

    @classmethod
    def constant(cls, c: int, grading, names=None) -> IntPolynomial:
        return cls({(0,) * len(grading): c}, grading, names)

    @classmethod
    def monomial(cls, m: Monomial, grading, names=None, coeff: int = 1) -> IntPolynomial:
        return cls({tuple(m): coeff}, grading, names)

    @classmethod
    def variables(cls, grading, names=None) -> list[IntPolynomial]:
        n = len(grading)
        return [
            cls({tuple(int(i == j) for j in range(n)): 1}, grading, names)
            for i in range(n)
        ]

    # -- arithmetic
    def _check(self, other: IntPolynomial):
        if self.grading != other.grading:
            raise ValueError(f"grading mismatch: {self.grading} vs {other.grading}")

    def _coerce(self, other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other, self.grading, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return IntPolynomial(terms, self.grading, self.names)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial({m: -c for m, c in self.terms.items()}, self.grading, self.names)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return IntPolynomial(terms, self.grading, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial.constant(1, self.grading, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other, self.grading)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.grading == other.grading and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.grading, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection
    def degrees(self) -> set[int]:
        return {weighted_degree(m, self.grading) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Weighted degree of a nonzero homogeneous polynomial."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("degree is defined for nonzero homogeneous polynomials only")
        return ds.pop()

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(tuple(m), 0)

    def coefficient_vector(self, basis: Sequence[Monomial]) -> list[int]:
        """Coordinates in a monomial basis; every term must lie in it."""
        index = {m: i for i, m in enumerate(basis)}
        vec = [0] * len(basis)
        for m, c in self.terms.items():
            try:
                vec[index[m]] = c
            except KeyError:
                raise ValueError(f"monomial {m} is outside the given basis") from None
        return vec

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for m in sorted(self.terms, reverse=True):
            s = _format_coeff_monomial(self.terms[m], m, self.names)
            if not out:
                out = s
            elif s.startswith("-"):
                out += " - " + s[1:]
            else:
                out += " + " + s
        return out

    def __repr__(self):
        return f"IntPolynomial({str(self)!r}, grading={self.grading})"

    def substitute(self, images: Sequence[IntPolynomial]) -> IntPolynomial:
        return substitute(self, images)


def substitute(f: IntPolynomial, images: Sequence[IntPolynomial]) -> IntPolynomial:
    """Apply the ring map sending generator ``i`` to ``images[i]``.

    >>> x, y = IntPolynomial.variables((1, 1), names=("x", "y"))
    >>> print(substitute(x * y, [x, x]))
    x^2
    """
    images = list(images)
    if len(images) != len(f.grading):
        raise ValueError(f"need {len(f.grading)} images, got {len(images)}")
    if not images:
        return f
    target = images[0]
    for g in images[1:]:
        target._check(g)
    powers: list[dict[int, IntPolynomial]] = [{} for _ in images]

    def power(i: int, e: int) -> IntPolynomial:
        if e not in powers[i]:
            powers[i][e] = images[i] ** e
        return powers[i][e]

    result = IntPolynomial.zero(target.grading, target.names)
    for m, c in f.terms.items():
        term = IntPolynomial.constant(c, target.grading, target.names)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        result = result + term
    return result
