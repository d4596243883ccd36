"""Tour of the Sierpinski gasket family.

Builds the first few levels, checks the closed-form vertex/edge counts
against the constructed graphs, and shows the canonical coordinate
labeling (top to bottom, left to right on the triangular lattice).
"""

from gasketlab import sierpinski
from gasketlab.io import to_graph6

print("level   vertices (closed form)   edges (closed form)   degree multiset")
for level in range(1, 8):
    s = sierpinski.build(level)
    n, m = sierpinski.vertex_count(level), sierpinski.edge_count(level)
    assert (s.graph.n, s.graph.edge_count) == (n, m)
    print(f"{level:>5}   {s.graph.n:>8} ({n:>6})        {s.graph.edge_count:>5} ({m:>5})        {dict(sorted(s.graph.degree_multiset().items()))}")

s3 = sierpinski.build(3)
print("\nlevel-3 gasket in graph6:", to_graph6(s3.graph))
print("corners (degree 2):", sierpinski.corners(s3))
print("its three level-2 sub-gaskets:")
for subset in sierpinski.subgaskets(s3, 2):
    print("  ", subset)
print("elementary triangles cover every vertex:",
      sorted({v for t in sierpinski.elementary_triangles(s3) for v in t})
      == list(s3.graph.vertices()))

print("\nfirst few coordinates (label -> (row, col)):")
for v in list(s3.coords)[:6]:
    print(f"  {v} -> {s3.coords[v]}")
