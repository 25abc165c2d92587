"""Embedded planar multigraphs: representation, faces, dual, augmentation,
degree reduction, generators and text I/O."""

from .faces import DualGraph, FaceStructure, build_dual, euler_components, trace_faces
from .generators import KINDS, generate
from .graph import NO_EDGE, PlanarGraph
from .io import format_graph, parse_graph
from .reduce import VertexMap, reduce_degree
from .surgery import add_chord, add_edge_to_isolated, augment_biconnect_triangulate

__all__ = [
    "DualGraph", "FaceStructure", "build_dual", "euler_components",
    "trace_faces", "KINDS", "generate", "NO_EDGE", "PlanarGraph",
    "format_graph", "parse_graph", "VertexMap", "reduce_degree",
    "add_chord", "add_edge_to_isolated", "augment_biconnect_triangulate",
]
