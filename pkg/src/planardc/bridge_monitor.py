"""Per-deletion criticality detection through the growing dual complement.

A union-find over the initial face walks absorbs the dual edge of every
deleted primal edge; its component count tracks the number of faces of the
drawing, so Euler's formula yields the primal component count after every
deletion, and a deletion is critical exactly when that count rises.  For a
disconnected initial graph the walk count overshoots the face count of a
side-by-side drawing by one outer walk per edge-bearing component; the
fixed offset below accounts for that, and dual self-loops are executed as
no-op unions, so the verdict always comes from the Euler count alone.
"""

from .counters import Counters
from .errors import StructureError
from .planar_core import PlanarGraph, build_dual, euler_components, trace_faces
from .union_find import Dsu


class DualComplement:
    """Bridge monitor bound to one PlanarGraph instance (single writer)."""

    __slots__ = ("graph", "dsu", "dual_endpoints", "edge_count_alive",
                 "vertex_count", "component_count", "_face_offset", "_counters")

    def __init__(self, g: PlanarGraph, counters: Counters | None = None):
        faces = trace_faces(g)
        dual = build_dual(g, faces)
        self.graph = g
        self.dsu = Dsu(dual.vertex_count)
        self.dual_endpoints = dual.endpoints_of_edge
        self.edge_count_alive = g.edge_count_alive
        self.vertex_count = g.vertex_count
        self._face_offset = max(faces.edge_bearing_components - 1, 0)
        self._counters = counters if counters is not None else Counters()
        self.component_count = self._components_from_euler()
        if self.component_count != g.component_count():
            raise StructureError(
                "Euler count disagrees with graph search at attach time; "
                "the rotation system is not a planar embedding")

    @classmethod
    def attach(cls, g: PlanarGraph, counters: Counters | None = None) -> "DualComplement":
        return cls(g, counters)

    def _face_count(self) -> int:
        if self.edge_count_alive == 0:
            return 1
        return self.dsu.component_count - self._face_offset

    def _components_from_euler(self) -> int:
        return euler_components(self.vertex_count, self.edge_count_alive,
                                self._face_count())

    def on_delete(self, e: int) -> bool:
        """Account for the deletion of edge e; True iff it is critical.

        The caller removes e from the primal graph in the same step; e must
        still be alive when this is called.
        """
        if not self.graph.alive[e]:
            raise ValueError(f"edge {e} is already deleted")
        a, b = self.dual_endpoints[e]
        before = self.dsu.op_counter
        self.dsu.union(a, b)
        self._counters.dsu_ops += self.dsu.op_counter - before
        self.edge_count_alive -= 1
        new_count = self._components_from_euler()
        critical = new_count > self.component_count
        self.component_count = new_count
        return critical
