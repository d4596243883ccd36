"""Sierpinski gasket graphs with canonical lattice coordinates.

Level 1 is a triangle at coordinates (0,0), (1,0), (1,1) on the triangular
lattice (row, col), col <= row.  Level l places three level-(l-1) copies at
offsets (0,0), (R',0), (R',R') with R' = 2^(l-2) (the row span of the
smaller gasket); coinciding coordinates are the shared corner vertices, so
deduplicating points realizes the corner identification.  Labels 1..n_l are
assigned by sorting coordinates by (row, col) ascending: top to bottom,
left to right.

Closed forms: n_l = (3/2)(3^(l-1) + 1) vertices and m_l = 3^l edges; for
l > 1 the three outer corners have degree 2 and every other vertex degree 4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ResourceLimitError
from .graphs import LabeledGraph

__all__ = [
    "SierpinskiGraph",
    "build",
    "vertex_count",
    "edge_count",
    "corners",
    "subgaskets",
    "elementary_triangles",
]

MAX_LEVEL_DEFAULT = 12

Coord = tuple[int, int]


def vertex_count(level: int) -> int:
    _check_level(level)
    return 3 * (3 ** (level - 1) + 1) // 2


def edge_count(level: int) -> int:
    _check_level(level)
    return 3**level


def _check_level(level: int) -> None:
    if level < 1:
        raise DomainError(f"gasket level must be >= 1, got {level}")


@dataclass(frozen=True)
class SierpinskiGraph:
    level: int
    graph: LabeledGraph
    coords: dict[int, Coord]  # label -> (row, col)
    corner_labels: tuple[int, int, int]


def _emit_edges(level: int, r0: int, c0: int, out: list[tuple[Coord, Coord]]) -> None:
    if level == 1:
        a, b, c = (r0, c0), (r0 + 1, c0), (r0 + 1, c0 + 1)
        out.append((a, b))
        out.append((a, c))
        out.append((b, c))
        return
    span = 2 ** (level - 2)
    _emit_edges(level - 1, r0, c0, out)
    _emit_edges(level - 1, r0 + span, c0, out)
    _emit_edges(level - 1, r0 + span, c0 + span, out)


def build(level: int, max_level: int = MAX_LEVEL_DEFAULT) -> SierpinskiGraph:
    """Construct the level-``level`` gasket graph with canonical labels."""
    _check_level(level)
    if level > max_level:
        raise ResourceLimitError(
            f"gasket level {level} exceeds the configured maximum {max_level} "
            f"(vertex count would be {vertex_count(level)}); raise max_level to override"
        )
    coord_edges: list[tuple[Coord, Coord]] = []
    _emit_edges(level, 0, 0, coord_edges)
    points = sorted({p for e in coord_edges for p in e})
    label = {p: t + 1 for t, p in enumerate(points)}
    graph = LabeledGraph.from_edges(
        len(points), [(label[a], label[b]) for a, b in coord_edges]
    )
    span = 2 ** (level - 1)
    corner_labels = (label[(0, 0)], label[(span, 0)], label[(span, span)])
    coords = {label[p]: p for p in points}
    return SierpinskiGraph(level, graph, coords, corner_labels)


def corners(s: SierpinskiGraph) -> tuple[int, int, int]:
    """Labels of the three outer corners (degree 2 for level > 1)."""
    return s.corner_labels


def _collect_offsets(level: int, target: int, r0: int, c0: int, out: list[Coord]) -> None:
    if level == target:
        out.append((r0, c0))
        return
    span = 2 ** (level - 2)
    _collect_offsets(level - 1, target, r0, c0, out)
    _collect_offsets(level - 1, target, r0 + span, c0, out)
    _collect_offsets(level - 1, target, r0 + span, c0 + span, out)


def _coord_points(level: int) -> list[Coord]:
    edges: list[tuple[Coord, Coord]] = []
    _emit_edges(level, 0, 0, edges)
    return sorted({p for e in edges for p in e})


def subgaskets(s: SierpinskiGraph, sub_level: int) -> list[tuple[int, ...]]:
    """The 3^(l-j) canonical level-j sub-gasket vertex sets, in recursion
    order (top copy, then lower-left, then lower-right)."""
    if not (1 <= sub_level <= s.level):
        raise DomainError(
            f"sub-gasket level must be in 1..{s.level}, got {sub_level}"
        )
    offsets: list[Coord] = []
    _collect_offsets(s.level, sub_level, 0, 0, offsets)
    template = _coord_points(sub_level)
    label = {coord: v for v, coord in s.coords.items()}
    subsets = []
    for r0, c0 in offsets:
        subsets.append(tuple(sorted(label[(r0 + r, c0 + c)] for r, c in template)))
    return subsets


def elementary_triangles(s: SierpinskiGraph) -> list[tuple[int, ...]]:
    """The level-1 sub-gaskets; every vertex lies in at least one."""
    return subgaskets(s, 1)
