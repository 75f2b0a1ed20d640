"""Closed-form counts: lean sets per size, totals, and orbit tables.

The number of lean sets with r gaps is C(alpha-1, r) * C(beta-1, r) / (r+1),
summing to C(alpha+beta, alpha) / (alpha+beta) over all r.  For beta =
alpha + 1 these specialise to Narayana and Catalan numbers.  The number of
n-generator semimodules isomorphic to their ell-fold syzygy has a similar
binomial form; Moebius inversion over the divisors of n separates the exact
periods from the cumulative counts and yields orbit tallies.

Every division performed here encodes a theorem, so a nonzero remainder is
raised as an internal error rather than rounded away.  Python integers are
exact at any size, so there is no overflow to guard against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvariantError
from .semigroup import SemigroupPair

__all__ = [
    "CountRow",
    "CountTable",
    "count_lean_sets",
    "count_lean_sets_total",
    "narayana",
    "catalan",
    "count_ell_periodic",
    "count_fixed_points",
    "orbit_count_table",
]


@dataclass(frozen=True)
class CountRow:
    """One divisor ell of n: cumulative, exact-period and orbit counts."""

    ell: int
    periodic: int
    exact: int
    orbits: int


@dataclass(frozen=True)
class CountTable:
    """Orbit statistics for the semimodules with n generators."""

    n: int
    rows: tuple[CountRow, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": [
                {"ell": row.ell, "A": row.periodic, "exact": row.exact, "orbits": row.orbits}
                for row in self.rows
            ],
        }


def _exact_div(numerator: int, divisor: int, context: str) -> int:
    quotient, remainder = divmod(numerator, divisor)
    if remainder:
        raise InvariantError(f"{context}: {numerator} is not divisible by {divisor}")
    return quotient


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _mobius(n: int) -> int:
    """Moebius function by trial division; arguments here are tiny."""
    if n == 1:
        return 1
    factors = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            factors += 1
        else:
            d += 1
    if n > 1:
        factors += 1
    return -1 if factors % 2 else 1


def count_lean_sets(semigroup: SemigroupPair, r: int) -> int:
    """Number of lean sets with exactly r gaps: C(alpha-1, r) C(beta-1, r) / (r+1)."""
    if r < 0:
        raise ValueError(f"gap count must be non-negative, got {r}")
    numerator = math.comb(semigroup.alpha - 1, r) * math.comb(semigroup.beta - 1, r)
    return _exact_div(numerator, r + 1, f"lean-set count for r={r}")


def count_lean_sets_total(semigroup: SemigroupPair) -> int:
    """Number of lean sets of any size: C(alpha+beta, alpha) / (alpha+beta)."""
    total = semigroup.alpha + semigroup.beta
    return _exact_div(math.comb(total, semigroup.alpha), total, "lean-set total")


def narayana(alpha: int, r: int) -> int:
    """Narayana number N(alpha, r+1) = C(alpha, r) C(alpha, r+1) / alpha.

    Equals the count of lean sets with r gaps for the pair (alpha, alpha+1);
    computed from its own formula so the two routes stay independent.
    """
    if alpha < 1 or r < 0:
        raise ValueError(f"need alpha >= 1 and r >= 0, got ({alpha}, {r})")
    numerator = math.comb(alpha, r) * math.comb(alpha, r + 1)
    return _exact_div(numerator, alpha, f"narayana({alpha}, {r})")


def catalan(n: int) -> int:
    """Catalan number C(2n, n) / (n+1); the lean-set total for (n, n+1)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return _exact_div(math.comb(2 * n, n), n + 1, f"catalan({n})")


def count_ell_periodic(semigroup: SemigroupPair, n: int, ell: int) -> int:
    """Semimodules with n generators isomorphic to their ell-fold syzygy.

    The matrix of such a module tiles into blocks whose shape forces
    n/ell to divide alpha*beta; when it does not, no module qualifies and
    the count is 0 by definition (the bare binomial expression would
    overcount in that case).
    """
    alpha, beta = semigroup.alpha, semigroup.beta
    if not 1 <= n <= alpha:
        raise ValueError(f"generator count must lie in [1, {alpha}], got {n}")
    if ell < 1 or n % ell:
        raise ValueError(f"ell must be a positive divisor of n={n}, got {ell}")
    quotient = n // ell
    if semigroup.product % quotient:
        return 0
    ga = math.gcd(quotient, alpha)
    gb = math.gcd(quotient, beta)
    numerator = math.comb(alpha // ga - 1, ell * gb - 1) * math.comb(beta // gb - 1, ell * ga - 1)
    return _exact_div(numerator, n, f"ell-periodic count for n={n}, ell={ell}")


def count_fixed_points(semigroup: SemigroupPair, n: int) -> int:
    """Semimodules with n generators isomorphic to their own syzygy.

    Zero unless n divides alpha*beta; for n = alpha every module qualifies.
    """
    alpha, beta = semigroup.alpha, semigroup.beta
    if not 1 <= n <= alpha:
        raise ValueError(f"generator count must lie in [1, {alpha}], got {n}")
    if semigroup.product % n:
        return 0
    ga = math.gcd(n, alpha)
    gb = math.gcd(n, beta)
    numerator = math.comb(alpha // ga - 1, gb - 1) * math.comb(beta // gb - 1, ga - 1)
    return _exact_div(numerator, n, f"fixed-point count for n={n}")


def orbit_count_table(semigroup: SemigroupPair, n: int) -> CountTable:
    """Per-divisor orbit statistics for the n-generator semimodules.

    For each divisor ell of n the cumulative count comes from the closed
    form, the exact-period count by Moebius inversion over the divisor
    lattice, and the orbit count by dividing out ell.  The exact counts must
    sum to the number of all n-generator semimodules.
    """
    divisors = _divisors(n)
    periodic = {ell: count_ell_periodic(semigroup, n, ell) for ell in divisors}
    rows = []
    for ell in divisors:
        exact = sum(_mobius(ell // d) * periodic[d] for d in _divisors(ell))
        if exact < 0:
            raise InvariantError(f"negative exact-period count {exact} for ell={ell}")
        orbits = _exact_div(exact, ell, f"orbit count for ell={ell}")
        rows.append(CountRow(ell=ell, periodic=periodic[ell], exact=exact, orbits=orbits))
    total = sum(row.exact for row in rows)
    expected = count_lean_sets(semigroup, n - 1)
    if total != expected:
        raise InvariantError(
            f"exact-period counts sum to {total}, but there are {expected} modules"
        )
    return CountTable(n=n, rows=tuple(rows))
