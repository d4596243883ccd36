"""Graph I/O: graph6 (read/write), JSON edge lists, DOT export, bit text.

The graph6 codec follows the de-facto format used by nauty and friends:
vertices 0..n-1, size bytes N(n), then the upper triangle of the adjacency
matrix in column-major order, packed 6 bits per printable byte (offset 63).
Our 1-based labels map to graph6 vertex i-1.
"""

from __future__ import annotations

import json

from .errors import DomainError
from .graphs import LabeledGraph

__all__ = [
    "to_graph6",
    "from_graph6",
    "to_json_edges",
    "from_json_edges",
    "to_dot",
]

_G6_HEADER = ">>graph6<<"


def _g6_size_bytes(n: int) -> bytes:
    if n < 0:
        raise DomainError(f"graph6 requires n >= 0, got {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes(
            [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
        )
    if n <= 68719476735:
        return bytes([126, 126]) + bytes(
            (((n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0)
        )
    raise DomainError(f"graph6 supports n < 2^36, got {n}")


def _g6_read_size(data: bytes) -> tuple[int, int]:
    """Return (n, offset of first adjacency byte)."""
    if not data:
        raise DomainError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise DomainError("truncated graph6 size field")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise DomainError("truncated graph6 size field")
    n = 0
    for b in data[2:8]:
        n = (n << 6) | (b - 63)
    return n, 8


def to_graph6(g: LabeledGraph, header: bool = False) -> str:
    """Encode in graph6; bit-exact against the reference format."""
    out = bytearray(_g6_size_bytes(g.n))
    acc = 0
    nbits = 0
    for j in range(2, g.n + 1):  # column-major upper triangle
        row = g.adj[j]
        for i in range(1, j):
            acc = (acc << 1) | (1 if i in row else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    text = out.decode("ascii")
    return _G6_HEADER + text if header else text


def from_graph6(text: str) -> LabeledGraph:
    """Decode a graph6 string (optional ``>>graph6<<`` header allowed)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    data = s.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise DomainError("graph6 string has bytes outside the printable range 63..126")
    n, offset = _g6_read_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[offset:]
    if len(body) != need:
        raise DomainError(
            f"graph6 body for n={n} must be {need} bytes, got {len(body)}"
        )
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    edges = []
    t = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[t]:
                edges.append((i, j))
            t += 1
    if any(bits[t:]):
        raise DomainError("graph6 padding bits must be zero")
    return LabeledGraph.from_edges(n, edges)


def to_json_edges(g: LabeledGraph) -> str:
    payload = {"n": g.n, "edges": [[i, j] for i, j in g.edges()]}
    return json.dumps(payload, sort_keys=True)


def from_json_edges(text: str) -> LabeledGraph:
    try:
        payload = json.loads(text)
        n = payload["n"]
        edges = payload["edges"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise DomainError(f"invalid JSON edge list: {exc}") from exc
    return LabeledGraph.from_edges(n, edges)


def to_dot(g: LabeledGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    isolated = [v for v in g.vertices() if not g.adj[v]]
    lines.extend(f"  {v};" for v in isolated)
    lines.extend(f"  {i} -- {j};" for i, j in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
