"""Finite commutative rings, zero-divisor graphs and multiset dimension."""

from .construct import build_ring
from .errors import CzdgError
from .graphs import SimpleGraph, annihilator_classes, compressed_graph, zero_divisor_graph
from .invariants import INF, MdimResult, metric_dimension, multiset_dimension
from .parser import format_ring_expr, parse_ring_expr

__all__ = [
    "INF",
    "CzdgError",
    "MdimResult",
    "SimpleGraph",
    "annihilator_classes",
    "build_ring",
    "compressed_graph",
    "format_ring_expr",
    "metric_dimension",
    "multiset_dimension",
    "parse_ring_expr",
    "zero_divisor_graph",
]
