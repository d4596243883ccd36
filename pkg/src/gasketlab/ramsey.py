"""Induced-pattern search, exhaustive 2-coloring verification, and the
union/split construction for induced-Ramsey hosts.

A host graph G is *verified* for pattern H when every 2-coloring of E(G)
contains a monochromatic induced copy of H.  Verification evaluates all
2^|E| colorings bit-parallel: for each induced copy, the set of colorings
in which it is monochromatic (its edge set all red, or all blue) is an
indicator bitset over coloring space, and the host is verified iff the
union of those bitsets covers everything.  Every coloring is genuinely
evaluated; on failure the smallest uncovered coloring (edges red on the set
bits of its index) is returned as the witness.

The split algorithm recovers, from a disjoint union, the part whose
components can host a monochromatic induced copy: a component admits such
a coloring iff it contains an induced copy at all (the one-color coloring
witnesses the forward direction), which is what the fast mode checks
directly and the proof-faithful mode confirms by scanning colorings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DomainError, ResourceLimitError
from .graphs import LabeledGraph, connected_components, disjoint_union, induced_subgraph
from .isomorphism import find_isomorphism
from . import sierpinski

__all__ = [
    "HostCertificate",
    "OracleResult",
    "UnionConstruction",
    "SplitResult",
    "BoundsReport",
    "find_induced_occurrences",
    "has_mono_induced",
    "is_host",
    "induced_ramsey_oracle",
    "construct_union",
    "split_union",
    "bounds_report",
    "poly_exp_crossover_level",
]

PATTERN_SIZE_MAX = 16
COLORING_EDGE_BUDGET = 28

TwoColoring = dict[tuple[int, int], str]


def find_induced_occurrences(
    g: LabeledGraph, pattern: LabeledGraph, limit: int | None = None
) -> list[tuple[int, ...]]:
    """All vertex subsets inducing a graph isomorphic to ``pattern``.

    Complete up to ``limit``, in lexicographic subset order.  Subsets are
    prefiltered on induced degree multisets before the isomorphism search.
    """
    k = pattern.n
    if k > PATTERN_SIZE_MAX:
        raise DomainError(
            f"pattern has {k} vertices; the search is limited to {PATTERN_SIZE_MAX}"
        )
    if k > g.n:
        return []
    target_degs = sorted(
        d for d, cnt in pattern.degree_multiset().items() for _ in range(cnt)
    )
    rows = g.row_masks()
    out: list[tuple[int, ...]] = []
    for subset in combinations(range(1, g.n + 1), k):
        submask = 0
        for v in subset:
            submask |= 1 << (v - 1)
        degs = sorted((rows[v] & submask).bit_count() for v in subset)
        if degs != target_degs:
            continue
        if find_isomorphism(induced_subgraph(g, subset), pattern) is not None:
            out.append(subset)
            if limit is not None and len(out) >= limit:
                break
    return out


def _validate_coloring(g: LabeledGraph, coloring: TwoColoring) -> TwoColoring:
    normalized: TwoColoring = {}
    for (i, j), color in coloring.items():
        if color not in ("red", "blue"):
            raise DomainError(f"color must be 'red' or 'blue', got {color!r}")
        a, b = (i, j) if i < j else (j, i)
        if not g.has_edge(a, b):
            raise DomainError(f"colored pair ({a},{b}) is not an edge")
        normalized[(a, b)] = color
    missing = [e for e in g.edges() if e not in normalized]
    if missing:
        raise DomainError(
            f"coloring must be total on E(G); {len(missing)} edges uncolored, "
            f"first {missing[0]}"
        )
    return normalized


def has_mono_induced(
    g: LabeledGraph, coloring: TwoColoring, pattern: LabeledGraph
) -> bool:
    """True iff some induced copy of ``pattern`` has all its edges one color.

    Non-edges of the copy carry no color constraint.
    """
    col = _validate_coloring(g, coloring)
    for subset in find_induced_occurrences(g, pattern):
        colors = {
            col[(a, b)]
            for a, b in combinations(subset, 2)
            if g.has_edge(a, b)
        }
        if len(colors) <= 1:  # empty = vacuously monochromatic
            return True
    return False


@dataclass(frozen=True)
class HostCertificate:
    host: LabeledGraph
    pattern: LabeledGraph
    verified: bool
    colorings_checked: int
    witness: TwoColoring | None  # a coloring with no monochromatic copy


def _mono_union(
    g: LabeledGraph, pattern: LabeledGraph, max_edges: int
) -> tuple[int, int, list[tuple[int, int]]]:
    """(U, m, edges): U has bit R set iff coloring R contains a mono copy.

    Coloring R is the integer whose bit t means edge t is red.  For a copy
    with edge mask ``mask``, the all-blue colorings are exactly the subsets
    of the complementary edge set - built by doubling a single bit over the
    free edges - and the all-red ones are that same set shifted by ``mask``.
    """
    edges = list(g.edges())
    m = len(edges)
    if m > max_edges:
        raise ResourceLimitError(
            f"host has {m} edges; exhaustive 2-coloring is limited to "
            f"{max_edges} edges (2^{m} colorings)"
        )
    edge_index = {e: t for t, e in enumerate(edges)}
    copy_masks = set()
    for subset in find_induced_occurrences(g, pattern):
        mask = 0
        for a, b in combinations(subset, 2):
            if g.has_edge(a, b):
                mask |= 1 << edge_index[(a, b)]
        copy_masks.add(mask)
    full = (1 << (1 << m)) - 1
    union = 0
    for mask in sorted(copy_masks):
        blue = 1  # indicator of {R : R /\ mask = 0}, grown over free edges
        for b in range(m):
            if not (mask >> b & 1):
                blue |= blue << (1 << b)
        union |= blue | (blue << mask)
        if union == full:
            break
    return union, m, edges


def _coloring_from_index(r: int, edges: list[tuple[int, int]]) -> TwoColoring:
    return {e: ("red" if r >> t & 1 else "blue") for t, e in enumerate(edges)}


def is_host(
    g: LabeledGraph, pattern: LabeledGraph, max_edges: int = COLORING_EDGE_BUDGET
) -> HostCertificate:
    """Verify that every 2-coloring of E(g) has a monochromatic induced copy.

    All 2^|E| colorings are evaluated; a failure returns the smallest
    uncovered coloring index as witness.
    """
    union, m, edges = _mono_union(g, pattern, max_edges)
    full = (1 << (1 << m)) - 1
    checked = 1 << m
    if union == full:
        return HostCertificate(g, pattern, True, checked, None)
    missing = (~union) & full
    lowest = (missing & -missing).bit_length() - 1
    return HostCertificate(g, pattern, False, checked, _coloring_from_index(lowest, edges))


@dataclass(frozen=True)
class OracleResult:
    """Smallest verified host within a *declared candidate list*.

    The true induced-Ramsey number minimizes over all graphs; this oracle
    only scopes the given candidates, and says so.
    """

    pattern: LabeledGraph
    found_index: int | None  # index into the candidate list
    host: LabeledGraph | None
    certificates: tuple[HostCertificate, ...]  # failures, then the success


def induced_ramsey_oracle(
    pattern: LabeledGraph,
    hosts: list[LabeledGraph],
    max_edges: int = COLORING_EDGE_BUDGET,
) -> OracleResult:
    certs: list[HostCertificate] = []
    for idx, host in enumerate(hosts):
        cert = is_host(host, pattern, max_edges=max_edges)
        certs.append(cert)
        if cert.verified:
            return OracleResult(pattern, idx, host, tuple(certs))
    return OracleResult(pattern, None, None, tuple(certs))


@dataclass(frozen=True)
class UnionConstruction:
    """Disjoint union with recorded roles: part 1 should be pattern-free,
    part 2 carries the pattern occurrences."""

    graph: LabeledGraph
    g1_vertices: tuple[int, ...]
    g2_vertices: tuple[int, ...]


def construct_union(g1: LabeledGraph, g2: LabeledGraph) -> UnionConstruction:
    union = disjoint_union(g1, g2)
    return UnionConstruction(
        graph=union,
        g1_vertices=tuple(range(1, g1.n + 1)),
        g2_vertices=tuple(range(g1.n + 1, g1.n + g2.n + 1)),
    )


@dataclass(frozen=True)
class SplitResult:
    g1_vertices: tuple[int, ...]
    g2_vertices: tuple[int, ...]
    mode: str  # "fast" | "proof-faithful"


def split_union(
    g: LabeledGraph,
    pattern: LabeledGraph,
    mode: str = "fast",
    max_edges: int = COLORING_EDGE_BUDGET,
) -> SplitResult:
    """Assign each component to part 2 iff it can host a monochromatic
    induced copy of ``pattern``.

    fast: the component contains an induced copy (the one-color coloring
    then witnesses a monochromatic one).  proof-faithful: scan all edge
    2-colorings of the component for one containing a monochromatic induced
    copy.  The two modes agree on every input where both run.
    """
    if mode not in ("fast", "proof-faithful"):
        raise DomainError(f"mode must be 'fast' or 'proof-faithful', got {mode!r}")
    g1: list[int] = []
    g2: list[int] = []
    for component in connected_components(g):
        comp_graph = induced_subgraph(g, component)
        if mode == "fast":
            hosts_copy = bool(find_induced_occurrences(comp_graph, pattern, limit=1))
        else:
            if comp_graph.edge_count > max_edges:
                raise ResourceLimitError(
                    f"component {component[:4]}... has {comp_graph.edge_count} edges, "
                    f"over the proof-faithful budget {max_edges}; use fast mode"
                )
            union, _, _ = _mono_union(comp_graph, pattern, max_edges)
            hosts_copy = union != 0
        (g2 if hosts_copy else g1).extend(component)
    return SplitResult(tuple(sorted(g1)), tuple(sorted(g2)), mode)


@dataclass(frozen=True)
class BoundsReport:
    """Host-size bound calculators for a bounded-degree pattern.

    ``chvatal`` is the classical Ramsey bound k 2^(c D log2 D) for max
    degree D; ``luczak_rodl`` is the polynomial induced-Ramsey bound k^c_d.
    Both constants are caller-supplied parameters, not asserted values.
    ``incompressible_lower`` = 2^((k-1)/2) is the exponential host-size
    bound from two-part description-length accounting, and
    ``incompressible_upper`` adds the polynomial bound on top of it.
    """

    pattern_size: int
    max_degree: int
    c: float
    c_d: float
    chvatal: float
    luczak_rodl: float
    incompressible_lower: float
    incompressible_upper: float


def bounds_report(pattern: LabeledGraph, c: float, c_d: float) -> BoundsReport:
    if c <= 0 or c_d <= 0:
        raise DomainError(f"constants must be positive, got c={c}, c_d={c_d}")
    k = pattern.n
    delta = max((pattern.degree(v) for v in pattern.vertices()), default=0)
    exponent = c * delta * math.log2(delta) if delta >= 2 else 0.0
    chvatal = k * 2.0**exponent
    if float(c_d).is_integer():
        luczak_rodl: float = k ** int(c_d)
    else:
        luczak_rodl = float(k) ** c_d
    lower = 2.0 ** ((k - 1) / 2)
    return BoundsReport(
        pattern_size=k,
        max_degree=delta,
        c=float(c),
        c_d=float(c_d),
        chvatal=chvatal,
        luczak_rodl=luczak_rodl,
        incompressible_lower=lower,
        incompressible_upper=lower + luczak_rodl,
    )


def poly_exp_crossover_level(c_d: int | float | Fraction) -> int | None:
    """Largest gasket level whose vertex count k satisfies k^c_d >= 2^((k-1)/2).

    Above the returned level the polynomial host bound k^c_d can never reach
    the exponential lower bound, so only finitely many levels are compatible.
    Comparisons are exact: with c_d = p/q the test is k^(2p) >= 2^(q(k-1)).
    Terminates because the exponential side eventually dominates; the scan
    stops once failure is certain by a doubling margin that only grows with
    the level.
    """
    frac = Fraction(c_d)
    if frac <= 0:
        raise DomainError(f"c_d must be positive, got {c_d}")
    p, q = frac.numerator, frac.denominator
    best: int | None = None
    level = 1
    while True:
        k = sierpinski.vertex_count(level)
        rhs_bits = q * (k - 1)
        lhs_bits_cap = 2 * p * k.bit_length()  # k^(2p) < 2^(2p bitlen(k))
        if rhs_bits > lhs_bits_cap:
            if rhs_bits > 2 * lhs_bits_cap:
                return best  # margin persists for all larger levels
        elif k ** (2 * p) >= 1 << rhs_bits:
            best = level
        level += 1
        if level > 1000:  # unreachable for positive c_d; guards the loop
            return best
