"""gasketlab: a desk-scale laboratory for Sierpinski gasket graphs.

Exact edge-bit codecs, close-knit ratio analysis, two-part compression
accounting, induced-Ramsey verification, and coordination-game diffusion,
all with deterministic seeds and exact rational arithmetic where thresholds
matter.
"""

from .errors import DomainError, ResourceLimitError
from .graphs import (
    EdgeBitString,
    LabeledGraph,
    connected_components,
    decode,
    disjoint_union,
    encode,
    gnp_sample,
    induced_subgraph,
    is_ordered_occurrence,
    pair_at,
    pos,
)
from .catalog import named_graph

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "DomainError",
    "ResourceLimitError",
    "LabeledGraph",
    "EdgeBitString",
    "pos",
    "pair_at",
    "encode",
    "decode",
    "induced_subgraph",
    "is_ordered_occurrence",
    "connected_components",
    "disjoint_union",
    "gnp_sample",
    "named_graph",
]
