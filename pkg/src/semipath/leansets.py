"""Lean sets: canonical labels for isomorphism classes of semimodules.

A finite set of non-negative integers containing 0 is lean when the absolute
difference of any two of its elements avoids the semigroup.  Writing each
nonzero element as a gap point (a, b), a set is lean exactly when sorting by
a makes the b coordinates strictly decrease; the enumerator walks those
monotone chains of gap points directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .semigroup import GapPoint, SemigroupPair, gap_point, gaps, is_member, presentation

__all__ = ["LeanSet", "is_lean", "enumerate_lean_sets"]


@dataclass(frozen=True)
class LeanSet:
    """A lean set, stored both as sorted values and as gap points sorted by a."""

    semigroup: SemigroupPair
    members: tuple[int, ...]
    gap_points: tuple[GapPoint, ...]

    @property
    def gap_count(self) -> int:
        return len(self.gap_points)

    @classmethod
    def from_members(cls, semigroup: SemigroupPair, xs: Iterable[int]) -> "LeanSet":
        values = sorted(set(xs))
        if not is_lean(semigroup, values):
            raise ValueError(
                f"{set(values)} is not a lean set of <{semigroup.alpha},{semigroup.beta}>"
            )
        points = sorted((gap_point(semigroup, x) for x in values if x), key=lambda g: g.a)
        return cls(semigroup, tuple(values), tuple(points))


def _pairwise_lean(semigroup: SemigroupPair, values: list[int]) -> bool:
    return all(not is_member(semigroup, y - x) for x, y in combinations(values, 2))


def is_lean(semigroup: SemigroupPair, xs: Iterable[int]) -> bool:
    """Whether all pairwise differences of xs miss the semigroup.

    xs must contain 0 (normalize first); every other element then has to be a
    gap, and the gap points have to form a chain with a increasing and b
    decreasing.  The direct pairwise definition runs as a cross-check.
    """
    values = sorted(set(xs))
    if not values or values[0] != 0:
        raise ValueError("a lean set must consist of non-negative integers and contain 0")
    points = []
    lean = True
    for x in values[1:]:
        q = presentation(semigroup, x)
        if q.p != 1 or q.a == 0 or q.b == 0:
            lean = False
            break
        points.append((q.a, q.b))
    if lean:
        points.sort()
        lean = all(
            a1 < a2 and b1 > b2 for (a1, b1), (a2, b2) in zip(points, points[1:])
        )
    assert lean == _pairwise_lean(semigroup, values), "monotone criterion disagrees with definition"
    return lean


def _gap_chains(
    semigroup: SemigroupPair, gap_count: int | None = None
) -> Iterator[tuple[GapPoint, ...]]:
    """Chains of gap points with a strictly increasing and b strictly decreasing.

    Depth-first in lexicographic (a, b) order, which yields every chain before
    its extensions.  With a gap_count filter, branches whose longest possible
    chain stays short of the target are pruned via a reach table.
    """
    points = sorted(gaps(semigroup), key=lambda g: (g.a, g.b))
    count = len(points)
    succ = [
        [j for j in range(i + 1, count) if points[j].a > points[i].a and points[j].b < points[i].b]
        for i in range(count)
    ]
    reach = [1] * count
    if gap_count is not None:
        for i in reversed(range(count)):
            reach[i] = 1 + max((reach[j] for j in succ[i]), default=0)
    chain: list[GapPoint] = []

    def walk(cands) -> Iterator[tuple[GapPoint, ...]]:
        depth = len(chain)
        if gap_count is None:
            yield tuple(chain)
        elif depth == gap_count:
            yield tuple(chain)
            return
        for i in cands:
            if gap_count is not None and depth + reach[i] < gap_count:
                continue
            chain.append(points[i])
            yield from walk(succ[i])
            chain.pop()

    yield from walk(range(count))


def enumerate_lean_sets(
    semigroup: SemigroupPair, gap_count: int | None = None
) -> Iterator[LeanSet]:
    """Yield every lean set exactly once, chains ordered lexicographically by (a, b).

    With gap_count = r only the sets with exactly r gaps are produced, in the
    same relative order as the unfiltered stream.
    """
    if gap_count is not None and not 0 <= gap_count <= semigroup.alpha - 1:
        raise ValueError(
            f"gap count must lie in [0, {semigroup.alpha - 1}], got {gap_count}"
        )
    for chain in _gap_chains(semigroup, gap_count):
        members = (0,) + tuple(sorted(p.value for p in chain))
        yield LeanSet(semigroup, members, chain)
