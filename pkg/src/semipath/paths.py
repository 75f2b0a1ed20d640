"""Staircase lattice paths from (0, alpha) to (beta, 0) and their step matrices.

Coordinate convention, used package-wide: x runs right from 0 to beta, y runs
down from alpha to 0, and a path is encoded by a 2-row matrix whose column i
holds (down-run i, right-run i).  An ES-turn is a corner where an east run
meets a south run; an SE-turn is the opposite kind of corner.  The diagonal
is the segment from (0, alpha) to (beta, 0), i.e. the line
x*alpha + y*beta = alpha*beta.

"Stays below the diagonal" is tested on ES-turns only: every other point of
the path is weakly south-west of some ES-turn (or of an endpoint, which may
lie on the diagonal), so the ES-turns are the only candidates for a
violation.  For coprime (alpha, beta) no interior lattice point lies on the
diagonal, hence the strict inequality a*alpha + b*beta < alpha*beta.
"""

from __future__ import annotations

from dataclasses import dataclass

from .leansets import LeanSet
from .semigroup import GapPoint, SemigroupPair

__all__ = [
    "PathMatrix",
    "LatticePath",
    "path_from_lean_set",
    "lean_set_from_path",
    "es_turns",
    "se_turns",
    "stays_below_diagonal",
    "cyclic_rotations",
    "admissible_rotation",
]


@dataclass(frozen=True)
class PathMatrix:
    """Run lengths of a staircase path: down runs on top, right runs below."""

    down: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.down) != len(self.right):
            raise ValueError("down and right rows must have equal length")
        if not self.down:
            raise ValueError("a path matrix needs at least one column")
        for row in (self.down, self.right):
            if any(not isinstance(v, int) or v < 1 for v in row):
                raise ValueError(f"all run lengths must be integers >= 1, got {row}")

    @property
    def columns(self) -> int:
        return len(self.down)


@dataclass(frozen=True)
class LatticePath:
    """The ES-turn points of a staircase path; a ascends while b descends."""

    es_turns: tuple[tuple[int, int], ...]

    @classmethod
    def from_matrix(cls, semigroup: SemigroupPair, matrix: PathMatrix) -> "LatticePath":
        return cls(es_turns(semigroup, matrix))

    @classmethod
    def from_lean_set(cls, semigroup: SemigroupPair, lean: LeanSet) -> "LatticePath":
        return cls(tuple((p.a, p.b) for p in lean.gap_points))


def _require_row_sums(semigroup: SemigroupPair, matrix: PathMatrix) -> None:
    if sum(matrix.down) != semigroup.alpha or sum(matrix.right) != semigroup.beta:
        raise ValueError(
            f"row sums must be ({semigroup.alpha}, {semigroup.beta}), "
            f"got ({sum(matrix.down)}, {sum(matrix.right)})"
        )


def path_from_lean_set(semigroup: SemigroupPair, lean: LeanSet) -> PathMatrix:
    """The step matrix whose ES-turns are exactly the lean set's gap points."""
    avals = [0] + [p.a for p in lean.gap_points] + [semigroup.beta]
    bvals = [semigroup.alpha] + [p.b for p in lean.gap_points] + [0]
    down = tuple(bvals[i] - bvals[i + 1] for i in range(len(bvals) - 1))
    right = tuple(avals[i + 1] - avals[i] for i in range(len(avals) - 1))
    return PathMatrix(down, right)


def lean_set_from_path(semigroup: SemigroupPair, matrix: PathMatrix) -> LeanSet:
    """Read the lean set off the ES-turns; inverse of path_from_lean_set.

    Rejects paths that touch or cross the diagonal, since their turning
    points do not correspond to gaps.
    """
    if not stays_below_diagonal(semigroup, matrix):
        raise ValueError("path does not stay below the diagonal, it encodes no lean set")
    points = tuple(
        GapPoint(semigroup.product - a * semigroup.alpha - b * semigroup.beta, a, b)
        for a, b in es_turns(semigroup, matrix)
    )
    members = (0,) + tuple(sorted(p.value for p in points))
    return LeanSet(semigroup, members, points)


def es_turns(semigroup: SemigroupPair, matrix: PathMatrix) -> tuple[tuple[int, int], ...]:
    """East-to-south corners, left to right; one per column except the last."""
    _require_row_sums(semigroup, matrix)
    out = []
    a, b = 0, semigroup.alpha
    for k in range(matrix.columns - 1):
        b -= matrix.down[k]
        a += matrix.right[k]
        out.append((a, b))
    return tuple(out)


def se_turns(semigroup: SemigroupPair, matrix: PathMatrix) -> tuple[tuple[int, int], ...]:
    """South-to-east corners, left to right; one per column."""
    _require_row_sums(semigroup, matrix)
    out = []
    a, b = 0, semigroup.alpha
    for k in range(matrix.columns):
        b -= matrix.down[k]
        out.append((a, b))
        a += matrix.right[k]
    return tuple(out)


def stays_below_diagonal(semigroup: SemigroupPair, matrix: PathMatrix) -> bool:
    """Whether every ES-turn (a, b) satisfies a*alpha + b*beta < alpha*beta."""
    _require_row_sums(semigroup, matrix)
    alpha, beta, ab = semigroup.alpha, semigroup.beta, semigroup.product
    a, b = 0, alpha
    for k in range(matrix.columns - 1):
        b -= matrix.down[k]
        a += matrix.right[k]
        if a * alpha + b * beta >= ab:
            return False
    return True


def _rotated(matrix: PathMatrix, k: int) -> PathMatrix:
    if k == 0:
        return matrix
    return PathMatrix(
        matrix.down[k:] + matrix.down[:k], matrix.right[k:] + matrix.right[:k]
    )


def cyclic_rotations(matrix: PathMatrix) -> tuple[PathMatrix, ...]:
    """All simultaneous column rotations of the matrix, rotation 0 first."""
    return tuple(_rotated(matrix, k) for k in range(matrix.columns))


def _admissible_index(alpha: int, beta: int, down: tuple[int, ...], right: tuple[int, ...]) -> int:
    """Index of the unique below-diagonal rotation, given raw rows.

    Doubling the path and sliding the diagonal shows that the rotation has to
    start at the turning point maximising a*alpha + b*beta; coprimality makes
    that maximiser unique.  The start corner (0, alpha) scores alpha*beta.
    """
    best, best_score = 0, alpha * beta
    a, b = 0, alpha
    for k in range(len(down) - 1):
        a += right[k]
        b -= down[k]
        score = a * alpha + b * beta
        if score > best_score:
            best_score = score
            best = k + 1
    return best


def admissible_rotation(semigroup: SemigroupPair, matrix: PathMatrix) -> tuple[int, PathMatrix]:
    """The unique cyclic rotation staying below the diagonal, as (index, matrix)."""
    _require_row_sums(semigroup, matrix)
    k = _admissible_index(semigroup.alpha, semigroup.beta, matrix.down, matrix.right)
    rotated = _rotated(matrix, k)
    if __debug__:
        hits = [
            i
            for i, candidate in enumerate(cyclic_rotations(matrix))
            if stays_below_diagonal(semigroup, candidate)
        ]
        assert hits == [k], f"rotation scan found {hits}, support line found {k}"
    return k, rotated
