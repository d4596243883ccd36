"""Close-knit ratios, exactly.

The close-knit ratio of a group S is the minimum over nonempty subsets S'
of (edges from S' into S, internal ones once) / (total degree of S').
All arithmetic is rational, so threshold comparisons are never a matter of
floating-point luck.
"""

from fractions import Fraction

from gasketlab import LabeledGraph, sierpinski
from gasketlab.closeknit import family_scan, is_rk_closeknit, min_ratio

k3 = LabeledGraph.complete(3)
print("triangle, whole group:", min_ratio(k3, (1, 2, 3)).min_ratio)

s3 = sierpinski.build(3).graph
interior = (2, 4, 5)  # an elementary triangle whose vertices all have degree 4
report = min_ratio(s3, interior)
print("interior triangle of the level-3 gasket:", report.min_ratio,
      "achieved by", report.argmin)

corner_triangle = (1, 2, 3)
print("corner triangle (one degree-2 vertex):", min_ratio(s3, corner_triangle).min_ratio)

print("\n(1/4, 3)-close-knit certificates for levels 1..4:")
for level in (1, 2, 3, 4):
    result = is_rk_closeknit(sierpinski.build(level).graph, Fraction(1, 4), 3)
    print(f"  level {level}: success={result.success}, groups examined={result.groups_examined}")

print("\nminimal group-size bound k per level, by exhaustive search:")
graphs = {level: sierpinski.build(level).graph for level in (1, 2, 3, 4)}
for r in (Fraction(1, 4), Fraction(1, 3)):
    print(f"  r = {r}: {family_scan(graphs, r)}")
print("(every vertex sits in an elementary triangle; interior triangles give"
      " exactly 1/4, so k = 3 certifies r = 1/4 from level 2 on)")
