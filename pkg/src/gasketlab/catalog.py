"""Named graph shorthands shared by the CLI, demos, and tests."""

from __future__ import annotations

import re

from .errors import DomainError
from .graphs import LabeledGraph
from . import sierpinski

__all__ = ["named_graph", "NAMED_PATTERNS"]

NAMED_PATTERNS = "K<n> (complete), S<l> (gasket), P<n> (path), C<n> (cycle), E<n> (edgeless)"


def named_graph(name: str) -> LabeledGraph:
    """K5, S3, P3, C5, E2 and friends; raises DomainError for anything else."""
    m = re.fullmatch(r"([KSPCE])(\d+)", name.strip())
    if not m:
        raise DomainError(
            f"unknown graph name {name!r}; expected one of {NAMED_PATTERNS}"
        )
    kind, value = m.group(1), int(m.group(2))
    if kind == "K":
        return LabeledGraph.complete(value)
    if kind == "S":
        return sierpinski.build(value).graph
    if kind == "E":
        return LabeledGraph.empty(value)
    if kind == "P":
        if value < 1:
            raise DomainError("path needs at least 1 vertex")
        return LabeledGraph.from_edges(value, [(i, i + 1) for i in range(1, value)])
    if value < 3:
        raise DomainError("cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, value)] + [(1, value)]
    return LabeledGraph.from_edges(value, edges)
