"""The canonical C(n,2)-bit graph encoding and the pos(i,j) pair order.

Every labeled graph on n vertices is one bit string of length C(n,2) and
vice versa; the demo walks the bijection and the supported I/O formats.
"""

from gasketlab import LabeledGraph, decode, encode, pair_at, pos
from gasketlab.io import to_dot, to_graph6, to_json_edges

path = LabeledGraph.from_edges(3, [(1, 2), (2, 3)])
bits = encode(path)
print("path 1-2-3 encodes to:", bits.bits)
print("pair order for n=3:", [pair_at(t, 3) for t in (1, 2, 3)])
print("bit positions: (1,2)->", pos(1, 2, 3), " (1,3)->", pos(1, 3, 3), " (2,3)->", pos(2, 3, 3))
print("decoding '101' recovers the path:", decode("101", 3) == path)

print("\nthe same graph in every supported format:")
print("  graph6:", to_graph6(path))
print("  json:  ", to_json_edges(path))
print("  dot:   ", to_dot(path).replace("\n", " "))

# the bijection at a larger size: all 2^C(4,2) = 64 strings decode uniquely
graphs = {decode(format(i, "06b"), 4) for i in range(64)}
print("\nall 64 six-bit strings give 64 distinct graphs on 4 vertices:", len(graphs) == 64)
