"""Best-response adoption on gaskets: thresholds, stalls, and noise.

A 2x2 coordination game gives the adoption threshold r*.  Noise-free
contagion from one elementary triangle floods the enclosing level-2
sub-gasket at r* = 1/3 but stalls at that sub-gasket's corners; at
r* = 1/4 one adopted neighbor suffices and the whole gasket falls.  A
little revision noise (epsilon > 0) bridges the corners instead.
"""

from gasketlab.diffusion import (
    CoordinationGame,
    DiffusionConfig,
    hitting_time_stats,
    risk_threshold,
    run,
)
from gasketlab.sierpinski import build, elementary_triangles

third = CoordinationGame(a=2, b=1, c=0, d=0)
quarter = CoordinationGame(a=3, b=1, c=0, d=0)
print("thresholds: r*(2,1,0,0) =", risk_threshold(third),
      " r*(3,1,0,0) =", risk_threshold(quarter))

s2 = build(2).graph
sweep = run(s2, third, DiffusionConfig(
    epsilon=0.0, init_adopters=(1, 2, 3), horizon=12, seed=0, schedule="round-robin"))
print("\nlevel 2, deterministic sweep from the top triangle:",
      sweep.adoption_counts, "-> all adopt at revision", sweep.hitting_time)

s3 = build(3)
for game, label in ((third, "r*=1/3"), (quarter, "r*=1/4")):
    trace = run(s3.graph, game, DiffusionConfig(
        epsilon=0.0, init_adopters=elementary_triangles(s3)[0],
        horizon=20 * s3.graph.n, seed=0, schedule="round-robin"))
    print(f"level 3, noise-free {label}: final adopters {len(trace.final_adopters)}"
          f"/{s3.graph.n}" + ("  (stalled at the level-2 sub-gasket corners)"
                              if trace.hitting_time is None else ""))

print("\nwith epsilon = 0.02, 100 trials per level, horizon 200n:")
for level in (2, 3, 4):
    gasket = build(level)
    config = DiffusionConfig(
        epsilon=0.02, init_adopters=elementary_triangles(gasket)[0],
        horizon=200 * gasket.graph.n, seed=99, schedule="uniform-random")
    stats = hitting_time_stats(gasket.graph, third, config, trials=100)
    print(f"  level {level} (n={gasket.graph.n:>2}): success {stats.success_rate:.0%},"
          f" median hitting time {stats.median_hit}")
