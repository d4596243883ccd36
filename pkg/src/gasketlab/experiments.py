"""Statistical harness: first-moment occurrence counts, planting, empirical
containment against exact codec thresholds, and cross-module sweep tables.

Sampling fixes p = 1/2 by default: the uniform distribution over C(n,2)-bit
strings is exactly G(n, 1/2), which is the ensemble the incompressibility
accounting speaks about.  Other p values are supported but flagged as
outside that model.  Every cell of every table derives its own seed from
the master seed, so rows reproduce in isolation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from . import closeknit, diffusion, ramsey, sierpinski, twopart
from .errors import DomainError, ResourceLimitError
from .graphs import LabeledGraph, as_subset, gnp_sample
from .isomorphism import automorphism_count as aut_count
from .rng import derive_seed

__all__ = [
    "MomentReport",
    "aut_count",
    "expected_occurrences",
    "plant_occurrence",
    "sample_pattern_free",
    "containment_experiment",
    "ContainmentResult",
    "threshold_sweep",
    "closeknit_diffusion_link",
    "table_to_csv",
]


@dataclass(frozen=True)
class MomentReport:
    """Exact expected induced-copy counts in G(n, 1/2).

    A fixed k-subset induces one specific labeled graph with probability
    2^-C(k,2); there are k!/|Aut(H)| labeled graphs isomorphic to H.
    """

    n: int
    k: int
    aut_count: int
    expected_labelled: Fraction
    expected_isomorphic: Fraction


def expected_occurrences(n: int, pattern: LabeledGraph) -> MomentReport:
    k = pattern.n
    aut = aut_count(pattern)
    per_subset = Fraction(1, 2 ** comb(k, 2))
    labelled = comb(n, k) * per_subset
    isomorphic = labelled * (factorial(k) // aut)
    return MomentReport(
        n=n,
        k=k,
        aut_count=aut,
        expected_labelled=labelled,
        expected_isomorphic=isomorphic,
    )


def plant_occurrence(
    g: LabeledGraph, pattern: LabeledGraph, subset: Iterable[int]
) -> LabeledGraph:
    """Overwrite the edges inside ``subset`` so it induces ``pattern``
    exactly under rank relabeling; all other edges untouched."""
    sub = as_subset(subset, g.n, nonempty=True)
    if len(sub) != pattern.n:
        raise DomainError(
            f"subset size {len(sub)} must equal pattern size {pattern.n}"
        )
    sub_set = set(sub)
    edges = [
        (i, j) for i, j in g.edges() if not (i in sub_set and j in sub_set)
    ]
    # rank relabeling is positional: sub[t-1] plays pattern vertex t
    edges.extend((sub[a - 1], sub[b - 1]) for a, b in pattern.edges())
    return LabeledGraph.from_edges(g.n, edges)


def sample_pattern_free(
    n: int,
    p: float,
    pattern: LabeledGraph,
    seed: int,
    max_attempts: int = 10_000,
) -> LabeledGraph:
    """Rejection-sample G(n, p) conditioned on containing no induced copy.

    Attempt i uses seed derive_seed(seed, "reject", i); the accepted sample
    has the exact conditional distribution.
    """
    for attempt in range(max_attempts):
        g = gnp_sample(n, p, derive_seed(seed, "reject", attempt))
        if not ramsey.find_induced_occurrences(g, pattern, limit=1):
            return g
    raise ResourceLimitError(
        f"no pattern-free G({n},{p}) sample within {max_attempts} attempts"
    )


@dataclass(frozen=True)
class ContainmentResult:
    n: int
    pattern_size: int
    trials: int
    mean_count: float
    containment_frequency: float
    expected_isomorphic: Fraction


def containment_experiment(
    n: int,
    pattern: LabeledGraph,
    trials: int,
    seed: int,
    p: float = 0.5,
    jobs: int = 1,
) -> ContainmentResult:
    """Sample mean of induced-isomorphic-copy counts and containment rate.

    Trial i samples G(n, p) with seed derive_seed(seed, "trial", i).
    """
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials}")

    def one_trial(i: int) -> int:
        g = gnp_sample(n, p, derive_seed(seed, "trial", i))
        return len(ramsey.find_induced_occurrences(g, pattern))

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            counts = list(pool.map(one_trial, range(trials)))
    else:
        counts = [one_trial(i) for i in range(trials)]
    return ContainmentResult(
        n=n,
        pattern_size=pattern.n,
        trials=trials,
        mean_count=sum(counts) / trials,
        containment_frequency=sum(1 for c in counts if c > 0) / trials,
        expected_isomorphic=expected_occurrences(n, pattern).expected_isomorphic,
    )


def threshold_sweep(
    levels: Sequence[int],
    n_values: Sequence[int],
    trials: int,
    seed: int,
    max_subsets: int = 200_000,
) -> list[dict[str, object]]:
    """Per (level, n): codec gain, break-even bounds, and empirical
    containment frequency of the gasket pattern in G(n, 1/2).

    Cell (l, n) derives seed ("sweep", l, n) so any row reproduces alone.
    Cells whose occurrence search would scan more than ``max_subsets``
    k-subsets keep their exact columns but report no frequency; the bound
    columns are the point of such rows.
    """
    rows: list[dict[str, object]] = []
    for level in levels:
        pattern = sierpinski.build(level).graph
        k = pattern.n
        bounds = twopart.asymptotic_bounds(k)
        for n in n_values:
            if n < k:
                frequency: float | None = 0.0  # impossible below pattern size
                bit_gain = None
            elif comb(n, k) > max_subsets:
                frequency = None  # sampling infeasible at this size
                bit_gain = twopart.gain(n, k, ordered=True)
            else:
                cell_seed = derive_seed(seed, "sweep", level, n)
                result = containment_experiment(n, pattern, trials, cell_seed)
                frequency = result.containment_frequency
                bit_gain = twopart.gain(n, k, ordered=True)
            rows.append(
                {
                    "level": level,
                    "k": k,
                    "n": n,
                    "gain_bits": bit_gain,
                    "break_even_ordered": bounds.ordered,
                    "break_even_log_slack": bounds.ordered_log_slack,
                    "containment_frequency": frequency,
                }
            )
    return rows


def closeknit_diffusion_link(
    levels: Sequence[int],
    game: diffusion.CoordinationGame,
    config: diffusion.DiffusionConfig,
    trials: int,
    k_cap: int = 8,
    jobs: int = 1,
    auto_horizon: bool = True,
) -> list[dict[str, object]]:
    """Per gasket level: adoption threshold, minimal close-knit k at that
    threshold, and hitting-time statistics from one elementary triangle.

    With ``auto_horizon`` the per-level horizon is 200 times the vertex
    count; otherwise ``config.horizon`` applies to every level.
    """
    r_star = diffusion.risk_threshold(game)
    rows: list[dict[str, object]] = []
    for level in levels:
        gasket = sierpinski.build(level)
        scan = closeknit.family_scan({level: gasket.graph}, r_star, k_cap=k_cap)
        init = (
            as_subset(config.init_adopters, gasket.graph.n)
            if config.init_adopters
            else sierpinski.elementary_triangles(gasket)[0]
        )
        level_config = diffusion.DiffusionConfig(
            epsilon=config.epsilon,
            init_adopters=init,
            horizon=200 * gasket.graph.n if auto_horizon else config.horizon,
            seed=derive_seed(config.seed, "link", level),
            schedule=config.schedule,
        )
        stats = diffusion.hitting_time_stats(
            gasket.graph, game, level_config, trials, jobs=jobs
        )
        rows.append(
            {
                "level": level,
                "n": gasket.graph.n,
                "r_star": str(r_star),
                "min_k": scan[level],
                "success_rate": stats.success_rate,
                "median_hit": stats.median_hit,
            }
        )
    return rows


def table_to_csv(
    rows: list[dict[str, object]], metadata: dict[str, object]
) -> str:
    """Render a sweep table as CSV with '#'-prefixed metadata header lines."""
    lines = [f"# {key} = {json.dumps(metadata[key], sort_keys=True)}" for key in sorted(metadata)]
    if rows:
        columns = list(rows[0].keys())
        lines.append(",".join(columns))
        for row in rows:
            lines.append(
                ",".join("" if row[c] is None else str(row[c]) for c in columns)
            )
    return "\n".join(lines) + "\n"
