"""Decremental connectivity for embedded planar graphs.

A library plus CLI harness covering the full algorithmic ladder: explicit
cc-identifier maintenance with smaller-half relabeling, r-division based
skeleton levels, and table-driven tiny-graph instances, with brute-force
oracles and counter-based verification of the total-work behaviour.
"""

from .counters import CounterReport, Counters
from .errors import InvariantError, StructureError
from .planar_core import (
    PlanarGraph, VertexMap, augment_biconnect_triangulate, build_dual,
    euler_components, format_graph, generate, parse_graph, reduce_degree,
    trace_faces,
)

__version__ = "0.1.0"
