"""Syzygies of semimodules, fundamental couples, and orbit structure.

The syzygy of a semimodule generated by a lean set I is the set of elements
admitting more than one coset presentation, i.e. the union of the pairwise
intersections (i + S) with (i' + S).  On the path side the picture is crisp:
number the ES-turns of the path right to left to get I, and the SE-turn
labels (reading the two corners on the axes via the extended labelling) give
a sequence J generating the syzygy.  The pair [I, J] is a fundamental
couple, characterised by four arithmetic conditions checked literally by
validate_fundamental_couple.

Taking syzygies and renormalising permutes the isomorphism classes with a
fixed number of generators; on matrices it advances the top row by one
column while keeping the bottom row, followed by the admissible rotation.
Iterating yields orbits, whose minimal length always divides the generator
count n, with n/length dividing alpha*beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import InvariantError
from .leansets import LeanSet
from .paths import PathMatrix, _admissible_index, admissible_rotation, lean_set_from_path
from .semigroup import SemigroupPair, is_member, membership_sieve
from .semimodules import Semimodule, minimal_generators

__all__ = [
    "FundamentalCouple",
    "CoupleValidation",
    "OrbitReport",
    "fundamental_couple",
    "validate_fundamental_couple",
    "syzygy",
    "syzygy_oracle",
    "syzygy_matrix",
    "syzygy_period",
    "iterated_syzygy",
    "orbit_witness",
]


@dataclass(frozen=True)
class FundamentalCouple:
    """The paired sequences [I, J] in right-to-left turn order.

    gens is I (it generates the semimodule, gens[0] = 0) and syzygy_gens is J
    (its cosets union to the syzygy), indexed so that syzygy_gens[k] is
    congruent to gens[k] mod alpha and to gens[k+1] mod beta.
    """

    gens: tuple[int, ...]
    syzygy_gens: tuple[int, ...]

    def to_json(self) -> dict:
        return {"I": list(self.gens), "J": list(self.syzygy_gens)}


@dataclass(frozen=True)
class CoupleValidation:
    """Outcome of checking the fundamental-couple conditions, first failure wins."""

    ok: bool
    clause: int | None = None
    index: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class OrbitReport:
    """Result of iterating syzygy-and-normalize until the start recurs."""

    n: int
    period: int
    cycle: tuple[Semimodule, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "period": self.period,
            "cycle": [list(module.gens) for module in self.cycle],
        }


def fundamental_couple(semigroup: SemigroupPair, lean: LeanSet) -> FundamentalCouple:
    """The couple [I, J] of a lean set.

    With gap points (a_1, b_1) .. (a_r, b_r) in ascending-a order and
    v(a, b) = alpha*beta - a*alpha - b*beta, I lists 0 followed by the turn
    values right to left, and J lists the SE-turn labels in the same
    direction: v(a_r, 0), v(a_{r-1}, b_r), ..., v(a_1, b_2), v(0, b_1).
    A gapless set gets I = [0], J = [alpha*beta].
    """
    points = lean.gap_points
    product = semigroup.product

    def label(a: int, b: int) -> int:
        return product - a * semigroup.alpha - b * semigroup.beta

    if not points:
        return FundamentalCouple((0,), (product,))
    reverse = points[::-1]
    gens = (0,) + tuple(p.value for p in reverse)
    syz = [label(reverse[0].a, 0)]
    syz.extend(label(nxt.a, prev.b) for prev, nxt in zip(reverse, reverse[1:]))
    syz.append(label(0, reverse[-1].b))
    return FundamentalCouple(gens, tuple(syz))


def _is_gap(semigroup: SemigroupPair, value: int) -> bool:
    return value >= 1 and not is_member(semigroup, value)


def validate_fundamental_couple(
    semigroup: SemigroupPair, gens, syzygy_gens
) -> CoupleValidation:
    """Check the four couple conditions literally, reporting the first failure.

    Condition 0: the first entry of I is 0.  Condition 1: the inner entries
    of I and J are gaps and the outer J entries are at most alpha*beta.
    Condition 2: the congruence ladder I[k] = J[k] mod alpha with I[k] < J[k],
    J[k] = I[k+1] mod beta with J[k] > I[k+1], and J[m] = 0 mod beta with
    J[m] >= 0.  Condition 3: pairwise differences within I are gaps.
    """
    iseq = tuple(gens)
    jseq = tuple(syzygy_gens)
    if len(iseq) != len(jseq) or not iseq:
        return CoupleValidation(
            False, None, None, f"I and J must be equally long and non-empty, got {len(iseq)} and {len(jseq)}"
        )
    m = len(iseq) - 1
    if iseq[0] != 0:
        return CoupleValidation(False, 0, 0, f"I[0] must be 0, got {iseq[0]}")
    for k in range(1, m + 1):
        if not _is_gap(semigroup, iseq[k]):
            return CoupleValidation(False, 1, k, f"I[{k}]={iseq[k]} is not a gap")
    for k in range(1, m):
        if not _is_gap(semigroup, jseq[k]):
            return CoupleValidation(False, 1, k, f"J[{k}]={jseq[k]} is not a gap")
    for k in (0, m):
        if jseq[k] > semigroup.product:
            return CoupleValidation(
                False, 1, k, f"J[{k}]={jseq[k]} exceeds alpha*beta={semigroup.product}"
            )
    for k in range(m + 1):
        if (jseq[k] - iseq[k]) % semigroup.alpha != 0 or iseq[k] >= jseq[k]:
            return CoupleValidation(
                False, 2, k, f"need I[{k}] < J[{k}] with I[{k}] = J[{k}] mod alpha"
            )
    for k in range(m):
        if (jseq[k] - iseq[k + 1]) % semigroup.beta != 0 or jseq[k] <= iseq[k + 1]:
            return CoupleValidation(
                False, 2, k, f"need J[{k}] > I[{k + 1}] with J[{k}] = I[{k + 1}] mod beta"
            )
    if jseq[m] % semigroup.beta != 0 or jseq[m] < 0:
        return CoupleValidation(
            False, 2, m, f"need J[{m}] >= 0 with J[{m}] = 0 mod beta"
        )
    for k in range(1, m + 1):
        for l in range(k + 1, m + 1):
            if not _is_gap(semigroup, abs(iseq[k] - iseq[l])):
                return CoupleValidation(
                    False, 3, k, f"|I[{k}] - I[{l}]| = {abs(iseq[k] - iseq[l])} is not a gap"
                )
    return CoupleValidation(True)


def syzygy(semigroup: SemigroupPair, module: Semimodule) -> Semimodule:
    """First syzygy of a normalized semimodule, via the SE-turn labels.

    Returns the semimodule generated by J, which is already its minimal
    generating set.  The result is not normalized: its least generator is
    min J.  A single-generator module (a shifted copy of the semigroup)
    gets the couple value alpha*beta, so its syzygy is the shift by
    alpha*beta, an isomorphic copy.
    """
    if not module.is_normalized:
        raise ValueError("syzygy needs a normalized semimodule; normalize first")
    lean = LeanSet.from_members(semigroup, module.gens)
    couple = fundamental_couple(semigroup, lean)
    return Semimodule(semigroup, tuple(sorted(couple.syzygy_gens)))


def syzygy_oracle(semigroup: SemigroupPair, module: Semimodule) -> Semimodule:
    """Brute-force syzygy from the definition, independent of the path route.

    Unions the pairwise intersections of generator cosets inside the window
    [0, 2*alpha*beta + max generator], which provably contains every minimal
    generator of the syzygy, then strips the result down to them.  Refuses
    single-generator input, whose defining union is empty.
    """
    gens = module.gens
    if len(gens) < 2:
        raise ValueError("the defining union is empty for a single generator")
    window = 2 * semigroup.product + max(gens)
    member = membership_sieve(semigroup, window)
    cosets = [
        frozenset(g + d for d in range(window - g + 1) if member[d]) for g in gens
    ]
    elements: set[int] = set()
    for one, other in combinations(cosets, 2):
        elements |= one & other
    return Semimodule(semigroup, minimal_generators(semigroup, elements))


def syzygy_matrix(matrix: PathMatrix) -> PathMatrix:
    """Path matrix of the syzygy: top row advanced by one column, bottom row kept.

    The result is generally not below the diagonal; its admissible rotation
    is the matrix of the normalized syzygy.
    """
    return PathMatrix(matrix.down[1:] + matrix.down[:1], matrix.right)


def _matrix_period(alpha: int, beta: int, down: tuple[int, ...], right: tuple[int, ...]) -> int:
    """Orbit length of the admissible matrix (down, right) by direct iteration."""
    n = len(down)
    d, r = down, right
    for t in range(1, n + 1):
        d = d[1:] + d[:1]
        k = _admissible_index(alpha, beta, d, r)
        if k:
            d = d[k:] + d[:k]
            r = r[k:] + r[:k]
        if d == down and r == right:
            return t
    raise InvariantError(f"no syzygy recurrence within {n} steps for {down}/{right}")


def syzygy_period(semigroup: SemigroupPair, module: Semimodule) -> OrbitReport:
    """Iterate normalize(syzygy(.)) until the start recurs.

    The recurrence must arrive within n = #generators steps, the period must
    divide n, and n/period must divide alpha*beta; each failure is an
    internal error, the facts being theorems.
    """
    if not module.is_normalized:
        raise ValueError("orbit iteration needs a normalized semimodule")
    n = len(module.gens)
    cycle = [module]
    current = module
    period = None
    for t in range(1, n + 1):
        current = syzygy(semigroup, current).normalize()
        if current == module:
            period = t
            break
        cycle.append(current)
    if period is None:
        raise InvariantError(f"no syzygy recurrence within {n} steps for {module.gens}")
    if n % period:
        raise InvariantError(f"period {period} does not divide generator count {n}")
    if semigroup.product % (n // period):
        raise InvariantError(
            f"n/period = {n // period} does not divide alpha*beta = {semigroup.product}"
        )
    return OrbitReport(n=n, period=period, cycle=tuple(cycle))


def iterated_syzygy(semigroup: SemigroupPair, module: Semimodule, times: int) -> Semimodule:
    """The times-fold syzygy.  Syzygy commutes with shifts, so intermediate
    results are renormalised internally and the accumulated shift restored."""
    if times < 1:
        raise ValueError(f"iteration count must be >= 1, got {times}")
    current = module
    for _ in range(times):
        shift = current.gens[0]
        base = Semimodule(semigroup, tuple(g - shift for g in current.gens))
        step = syzygy(semigroup, base)
        current = Semimodule(semigroup, tuple(g + shift for g in step.gens))
    return current


def orbit_witness(semigroup: SemigroupPair, n: int, ell: int) -> Semimodule:
    """A semimodule with n generators whose orbit length is exactly ell.

    Requires ell | n, n < alpha and n/ell | alpha*beta.  Both matrix rows are
    tiled from blocks of the shape [1, ..., 1, tail]; such blocks cannot be
    split into smaller repeating blocks, which pins the period to ell.
    """
    alpha, beta = semigroup.alpha, semigroup.beta
    if n < 1 or ell < 1 or n % ell:
        raise ValueError(f"need ell dividing n with both positive, got n={n}, ell={ell}")
    if n >= alpha:
        raise ValueError(f"witness construction needs n < alpha, got n={n}, alpha={alpha}")
    quotient = n // ell
    down_copies = math.gcd(alpha, quotient)
    right_copies = math.gcd(beta, quotient)
    if down_copies * right_copies != quotient:
        raise ValueError(
            f"n/ell = {quotient} does not divide alpha*beta = {semigroup.product}; "
            f"no such orbit exists"
        )
    down_len = n // down_copies
    right_len = n // right_copies
    down_block = (1,) * (down_len - 1) + (alpha // down_copies - down_len + 1,)
    right_block = (1,) * (right_len - 1) + (beta // right_copies - right_len + 1,)
    matrix = PathMatrix(down_block * down_copies, right_block * right_copies)
    _, admissible = admissible_rotation(semigroup, matrix)
    lean = lean_set_from_path(semigroup, admissible)
    return Semimodule(semigroup, lean.members)
