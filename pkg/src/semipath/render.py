"""ASCII and SVG pictures of staircase paths.

The drawing uses the package coordinate convention: x grows to the right,
y grows downward from alpha, so the path starts top-left at (0, alpha) and
ends bottom-right at (beta, 0).  Output is deterministic byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .leansets import LeanSet
from .paths import es_turns, path_from_lean_set, se_turns
from .semigroup import SemigroupPair, gaps

__all__ = ["RenderSpec", "render"]

_FORMATS = ("ascii", "svg")


@dataclass(frozen=True)
class RenderSpec:
    """What to draw and how large.  Labels are honored by the svg format only."""

    format: str = "ascii"
    cell: int = 20
    diagonal: bool = True
    markers: bool = True
    labels: bool = False

    def __post_init__(self) -> None:
        if self.format not in _FORMATS:
            raise ValueError(f"format must be one of {_FORMATS}, got {self.format!r}")
        if self.format == "svg" and self.cell < 4:
            raise ValueError(f"svg cell size must be at least 4 pixels, got {self.cell}")


def render(semigroup: SemigroupPair, lean: LeanSet, spec: RenderSpec = RenderSpec()) -> str:
    """Render the path of a lean set as text; no trailing newline."""
    if spec.format == "ascii":
        return _ascii(semigroup, lean, spec)
    return _svg(semigroup, lean, spec)


def _corners(semigroup: SemigroupPair, lean: LeanSet) -> list[tuple[int, int]]:
    matrix = path_from_lean_set(semigroup, lean)
    points = [(0, semigroup.alpha)]
    x, y = 0, semigroup.alpha
    for down, right in zip(matrix.down, matrix.right):
        y -= down
        points.append((x, y))
        x += right
        points.append((x, y))
    return points


def _ascii(semigroup: SemigroupPair, lean: LeanSet, spec: RenderSpec) -> str:
    alpha, beta = semigroup.alpha, semigroup.beta
    matrix = path_from_lean_set(semigroup, lean)
    grid = [[" "] * (beta + 1) for _ in range(alpha + 1)]

    def put(x: int, y: int, mark: str) -> None:
        grid[alpha - y][x] = mark

    if spec.diagonal:
        for x in range(beta + 1):
            y = (2 * alpha * (beta - x) + beta) // (2 * beta)
            put(x, y, ".")
    x, y = 0, alpha
    put(x, y, "#")
    for down, right in zip(matrix.down, matrix.right):
        for _ in range(down):
            y -= 1
            put(x, y, "#")
        for _ in range(right):
            x += 1
            put(x, y, "#")
    if spec.markers:
        for a, b in se_turns(semigroup, matrix):
            put(a, b, "S")
        for a, b in es_turns(semigroup, matrix):
            put(a, b, "E")
    return "\n".join("".join(row).rstrip() for row in grid)


def _svg(semigroup: SemigroupPair, lean: LeanSet, spec: RenderSpec) -> str:
    alpha, beta = semigroup.alpha, semigroup.beta
    cell = spec.cell
    margin = 2 * cell
    width = 2 * margin + beta * cell
    height = 2 * margin + alpha * cell

    def px(a: int) -> int:
        return margin + a * cell

    def py(b: int) -> int:
        return margin + (alpha - b) * cell

    radius = max(2, cell // 6)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">'
    ]
    for x in range(beta + 1):
        parts.append(
            f'<line x1="{px(x)}" y1="{py(alpha)}" x2="{px(x)}" y2="{py(0)}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
    for y in range(alpha + 1):
        parts.append(
            f'<line x1="{px(0)}" y1="{py(y)}" x2="{px(beta)}" y2="{py(y)}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
    if spec.diagonal:
        parts.append(
            f'<line x1="{px(0)}" y1="{py(alpha)}" x2="{px(beta)}" y2="{py(0)}" '
            f'stroke="#444444" stroke-width="1" stroke-dasharray="4 3"/>'
        )
    trail = " ".join(f"{px(a)},{py(b)}" for a, b in _corners(semigroup, lean))
    parts.append(f'<polyline points="{trail}" fill="none" stroke="#000000" stroke-width="3"/>')
    if spec.markers:
        matrix = path_from_lean_set(semigroup, lean)
        for a, b in se_turns(semigroup, matrix):
            parts.append(
                f'<circle cx="{px(a)}" cy="{py(b)}" r="{radius}" '
                f'fill="#ffffff" stroke="#000000" stroke-width="1"/>'
            )
        for a, b in es_turns(semigroup, matrix):
            parts.append(f'<circle cx="{px(a)}" cy="{py(b)}" r="{radius}" fill="#000000"/>')
    if spec.labels:
        size = max(cell // 2, 6)
        for point in gaps(semigroup):
            parts.append(
                f'<text x="{px(point.a) + cell // 8}" y="{py(point.b) - cell // 8}" '
                f'font-size="{size}" font-family="monospace">{point.value}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts)
