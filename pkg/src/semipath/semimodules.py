"""Semimodules over <alpha, beta>: subsets of N closed under adding the semigroup.

A semimodule is determined by its unique minimal generating set, whose
pairwise differences are all gaps.  Two semimodules are isomorphic exactly
when one is an integer shift of the other, so subtracting the least
generator gives a canonical representative containing 0; its generator set
is lean, and that correspondence is a bijection between isomorphism classes
and lean sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .semigroup import SemigroupPair, is_member, membership_sieve

__all__ = [
    "Semimodule",
    "minimal_generators",
    "normalize",
    "is_isomorphic",
    "elements_up_to",
]


@dataclass(frozen=True)
class Semimodule:
    """A semimodule held by its minimal generators, ascending.

    Not necessarily normalized; syzygies, for instance, are born shifted.
    Equality is literal equality of generator tuples, so use is_isomorphic
    (or compare normalizations) for shift-invariant questions.
    """

    semigroup: SemigroupPair
    gens: tuple[int, ...]

    def __post_init__(self) -> None:
        gens = self.gens
        if not gens:
            raise ValueError("a semimodule needs at least one generator")
        if any(not isinstance(g, int) or g < 0 for g in gens):
            raise ValueError(f"generators must be non-negative integers, got {gens}")
        if list(gens) != sorted(set(gens)):
            raise ValueError(f"generators must be strictly ascending, got {gens}")
        for x, y in combinations(gens, 2):
            if is_member(self.semigroup, y - x):
                raise ValueError(
                    f"{y} - {x} lies in the semigroup, so {gens} is not minimal"
                )

    @property
    def is_normalized(self) -> bool:
        return self.gens[0] == 0

    def normalize(self) -> "Semimodule":
        if self.is_normalized:
            return self
        shift = self.gens[0]
        return Semimodule(self.semigroup, tuple(g - shift for g in self.gens))

    @classmethod
    def generated_by(cls, semigroup: SemigroupPair, xs: Iterable[int]) -> "Semimodule":
        return cls(semigroup, minimal_generators(semigroup, xs))

    def to_json(self) -> dict:
        return {
            "alpha": self.semigroup.alpha,
            "beta": self.semigroup.beta,
            "generators": list(self.gens),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Semimodule":
        try:
            pair = SemigroupPair(data["alpha"], data["beta"])
            gens = [int(g) for g in data["generators"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed semimodule object: {data!r}") from exc
        return cls(pair, tuple(sorted(set(gens))))


def minimal_generators(semigroup: SemigroupPair, xs: Iterable[int]) -> tuple[int, ...]:
    """Minimal generating set of the semimodule generated by xs.

    Greedy sweep: repeatedly pick the least element not covered by the cosets
    of the generators found so far.  Past max(xs) + frobenius every integer
    is covered, so the sweep window stops there.
    """
    values = sorted(set(xs))
    if not values:
        raise ValueError("cannot generate a semimodule from an empty set")
    if values[0] < 0 or not all(isinstance(v, int) for v in values):
        raise ValueError(f"generators must be non-negative integers, got {values}")
    low = values[0]
    width = values[-1] + semigroup.frobenius + 1 - low + 1
    member = membership_sieve(semigroup, width - 1)
    in_module = [False] * width
    for x in values:
        base = x - low
        for d in range(width - base):
            if member[d]:
                in_module[base + d] = True
    covered = [False] * width
    out = []
    for offset in range(width):
        if in_module[offset] and not covered[offset]:
            out.append(low + offset)
            for d in range(width - offset):
                if member[d]:
                    covered[offset + d] = True
    return tuple(out)


def normalize(semigroup: SemigroupPair, gens: Union[Semimodule, Iterable[int]]) -> Semimodule:
    """Shift so the least generator becomes 0, re-minimalising along the way."""
    if isinstance(gens, Semimodule):
        values = list(gens.gens)
    else:
        values = sorted(set(gens))
    if not values:
        raise ValueError("cannot normalize an empty generator set")
    low = values[0]
    return Semimodule(semigroup, minimal_generators(semigroup, (v - low for v in values)))


def is_isomorphic(
    semigroup: SemigroupPair,
    first: Union[Semimodule, Iterable[int]],
    second: Union[Semimodule, Iterable[int]],
) -> bool:
    """Whether the two semimodules differ by an integer shift."""
    return normalize(semigroup, first).gens == normalize(semigroup, second).gens


def elements_up_to(semigroup: SemigroupPair, module: Semimodule, bound: int) -> list[int]:
    """All elements of the semimodule that do not exceed bound, sorted."""
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound}")
    member = membership_sieve(semigroup, bound)
    out: set[int] = set()
    for g in module.gens:
        if g > bound:
            continue
        out.update(g + d for d in range(bound - g + 1) if member[d])
    return sorted(out)
