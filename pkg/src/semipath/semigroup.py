"""Exact arithmetic in the numerical semigroup generated by two coprime integers.

The semigroup <alpha, beta> = {i*alpha + j*beta : i, j >= 0} misses finitely
many positive integers, its gaps; the largest gap is the Frobenius number
alpha*beta - alpha - beta.  Every positive integer n can be written uniquely
as n = p*alpha*beta - a*alpha - b*beta with p > 0, 0 <= a < beta and
0 <= b < alpha, and n is a gap exactly when p = 1 with a, b >= 1.  That
identifies each gap with a lattice point (a, b) strictly inside the triangle
with corners (0, 0), (beta, 0), (0, alpha), which is the bridge between the
arithmetic here and the lattice-path modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvariantError

__all__ = [
    "SemigroupPair",
    "Presentation",
    "GapPoint",
    "presentation",
    "is_member",
    "gaps",
    "gap_point",
    "membership_sieve",
]


@dataclass(frozen=True)
class SemigroupPair:
    """A coprime generator pair (alpha, beta) with 2 <= alpha < beta."""

    alpha: int
    beta: int
    product: int = field(init=False, repr=False, compare=False)
    frobenius: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.alpha, int) or not isinstance(self.beta, int):
            raise ValueError(f"generators must be integers, got ({self.alpha!r}, {self.beta!r})")
        if self.alpha < 2 or self.alpha >= self.beta:
            raise ValueError(f"need 2 <= alpha < beta, got ({self.alpha}, {self.beta})")
        if math.gcd(self.alpha, self.beta) != 1:
            raise ValueError(f"generators must be coprime, got ({self.alpha}, {self.beta})")
        object.__setattr__(self, "product", self.alpha * self.beta)
        object.__setattr__(self, "frobenius", self.alpha * self.beta - self.alpha - self.beta)


@dataclass(frozen=True)
class Presentation:
    """The unique triple (p, a, b) writing n as p*alpha*beta - a*alpha - b*beta."""

    p: int
    a: int
    b: int

    def value(self, semigroup: SemigroupPair) -> int:
        return self.p * semigroup.product - self.a * semigroup.alpha - self.b * semigroup.beta


@dataclass(frozen=True)
class GapPoint:
    """A gap value alpha*beta - a*alpha - b*beta together with its point (a, b), a, b >= 1."""

    value: int
    a: int
    b: int


def presentation(semigroup: SemigroupPair, n: int) -> Presentation:
    """Decompose n >= 1 as p*alpha*beta - a*alpha - b*beta.

    The residues of n determine a and b directly: b = -n/beta mod alpha and
    a = -n/alpha mod beta.  The remaining factor p is then an exact positive
    integer; anything else means the arithmetic is broken.
    """
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"presentation needs a positive integer, got {n!r}")
    alpha, beta = semigroup.alpha, semigroup.beta
    b = (-n * pow(beta, -1, alpha)) % alpha
    a = (-n * pow(alpha, -1, beta)) % beta
    p, rem = divmod(n + a * alpha + b * beta, semigroup.product)
    if rem != 0 or p <= 0:
        raise InvariantError(f"presentation of {n} failed: p={p}, remainder={rem}")
    return Presentation(p, a, b)


def is_member(semigroup: SemigroupPair, n: int) -> bool:
    """Whether n lies in <alpha, beta>."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"membership is defined for non-negative integers, got {n!r}")
    if n == 0:
        return True
    q = presentation(semigroup, n)
    return q.p >= 2 or q.a == 0 or q.b == 0


def gaps(semigroup: SemigroupPair) -> tuple[GapPoint, ...]:
    """All gaps in increasing value order; there are (alpha-1)(beta-1)/2 of them."""
    alpha, beta, ab = semigroup.alpha, semigroup.beta, semigroup.product
    out = []
    for a in range(1, beta):
        rest = ab - a * alpha
        top = min(alpha - 1, (rest - 1) // beta)
        for b in range(1, top + 1):
            out.append(GapPoint(ab - a * alpha - b * beta, a, b))
    out.sort(key=lambda g: g.value)
    expected = (alpha - 1) * (beta - 1) // 2
    if len(out) != expected:
        raise InvariantError(f"found {len(out)} gaps, expected {expected}")
    return tuple(out)


def gap_point(semigroup: SemigroupPair, n: int) -> GapPoint:
    """The lattice point of the gap n; raises ValueError when n is not a gap."""
    q = presentation(semigroup, n)
    if q.p != 1 or q.a == 0 or q.b == 0:
        raise ValueError(f"{n} is not a gap of <{semigroup.alpha},{semigroup.beta}>")
    return GapPoint(n, q.a, q.b)


def membership_sieve(semigroup: SemigroupPair, limit: int) -> list[bool]:
    """Boolean table member[k] for 0 <= k <= limit, built by dynamic programming.

    Independent of the presentation route, which makes it a convenient second
    opinion and the workhorse for windowed semimodule computations.
    """
    if limit < 0:
        raise ValueError(f"limit must be non-negative, got {limit}")
    member = [False] * (limit + 1)
    member[0] = True
    alpha, beta = semigroup.alpha, semigroup.beta
    for k in range(1, limit + 1):
        if k >= alpha and member[k - alpha]:
            member[k] = True
        elif k >= beta and member[k - beta]:
            member[k] = True
    return member
