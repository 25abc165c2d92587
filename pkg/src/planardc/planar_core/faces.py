"""Face tracing, Euler bookkeeping and dual-graph construction."""

from dataclasses import dataclass, field

from ..errors import InvariantError, StructureError
from .graph import NO_EDGE, PlanarGraph


@dataclass
class FaceStructure:
    """Partition of the alive half-edges into closed face walks.

    walk_count is the raw number of closed walks.  face_count is the number
    of faces of a plane drawing in which every connected component sits
    side by side in the unbounded face: each component with at least one
    edge contributes all of its walks but shares one "outer" walk with the
    global unbounded face, and a graph with no alive edges has exactly one
    face.  face_count is the quantity Euler's formula relates to the
    component count; for connected graphs it equals walk_count.
    """

    face_of: list[int]               # half-edge id -> walk id (-1 when dead)
    faces: list[list[int]]           # walk id -> half-edge ids in walk order
    face_count: int
    edge_bearing_components: int

    @property
    def walk_count(self) -> int:
        return len(self.faces)


def _face_walks(g: PlanarGraph):
    """Raw face walks of the alive subgraph (no Euler bookkeeping)."""
    n_half = len(g.head)
    face_of = [-1] * n_half
    faces: list[list[int]] = []
    alive = g.alive
    rotation_next = g.rotation_next
    for h0 in range(n_half):
        if face_of[h0] != -1 or not alive[h0 >> 1]:
            continue
        walk = []
        fid = len(faces)
        h = h0
        for _ in range(n_half + 1):
            if face_of[h] != -1:
                if h == h0 and walk:
                    break
                raise StructureError(f"face walk through half-edge {h0} does not close")
            face_of[h] = fid
            walk.append(h)
            h = rotation_next[h ^ 1]
        else:
            raise StructureError(f"face walk through half-edge {h0} runs away")
        faces.append(walk)
    return face_of, faces


def trace_faces(g: PlanarGraph) -> FaceStructure:
    """Trace all face walks of the alive subgraph of g.

    Raises StructureError if a walk fails to close, i.e. the rotation
    system is malformed.
    """
    face_of, faces = _face_walks(g)
    labels = g.component_labels()
    with_edges = set()
    alive = g.alive
    for e in range(len(alive)):
        if alive[e]:
            with_edges.add(labels[g.head[2 * e]])
    edge_bearing = len(with_edges)
    if edge_bearing == 0:
        face_count = 1
    else:
        face_count = len(faces) - edge_bearing + 1
    return FaceStructure(face_of=face_of, faces=faces, face_count=face_count,
                         edge_bearing_components=edge_bearing)


def euler_components(v: int, e_alive: int, f: int) -> int:
    """Component count from Euler's formula: |CC| = V - E + F - 1."""
    cc = v - e_alive + f - 1
    if cc < 1 and v > 0:
        raise InvariantError(
            f"counts (V={v}, E={e_alive}, F={f}) cannot describe a graph")
    return cc


@dataclass
class DualGraph:
    """One vertex per face walk of the initial graph, one edge per primal edge.

    Parallel dual edges appear exactly when two faces share several primal
    edges; a dual self-loop appears when both sides of a primal edge lie on
    the same walk.  endpoints_of_edge[e] gives the walk ids on the two
    sides of primal edge e, so the primal-edge -> dual-edge map is the
    identity on indices.
    """

    vertex_count: int
    endpoints_of_edge: list[tuple[int, int]]
    edge_bearing_components: int

    def adjacency(self) -> list[list[tuple[int, int]]]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for e, (a, b) in enumerate(self.endpoints_of_edge):
            if a == NO_EDGE:
                continue
            adj[a].append((b, e))
            if a != b:
                adj[b].append((a, e))
        return adj


def build_dual(g: PlanarGraph, f: FaceStructure) -> DualGraph:
    """Dual of the alive subgraph of g, given its traced faces."""
    endpoints = []
    for e in range(len(g.alive)):
        if g.alive[e]:
            endpoints.append((f.face_of[2 * e], f.face_of[2 * e + 1]))
        else:
            endpoints.append((NO_EDGE, NO_EDGE))
    return DualGraph(vertex_count=f.walk_count, endpoints_of_edge=endpoints,
                     edge_bearing_components=f.edge_bearing_components)
