"""Graph minors around the octahedron: splits, sums, chains and deciders."""

from .graph import SimpleGraph, contract_edge, delete_edge, delete_vertex, line_graph
from .canon import canonical_key, is_isomorphic
from .minors import find_minor, find_topological_minor, is_planar, verify_model
from .atlas import build
from .transforms import SplitSpec, SumSpec, apply_split, apply_sum, find_chain
from .characterize import (
    classify_C_or_L,
    decide_oct1_free_4connected,
    decide_oct1_free_planar,
    decide_oct2_free_4connected,
)

__all__ = [
    "SimpleGraph",
    "SplitSpec",
    "SumSpec",
    "apply_split",
    "apply_sum",
    "build",
    "canonical_key",
    "classify_C_or_L",
    "contract_edge",
    "decide_oct1_free_4connected",
    "decide_oct1_free_planar",
    "decide_oct2_free_4connected",
    "delete_edge",
    "delete_vertex",
    "find_chain",
    "find_minor",
    "find_topological_minor",
    "is_isomorphic",
    "is_planar",
    "line_graph",
    "verify_model",
]
