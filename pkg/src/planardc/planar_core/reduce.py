"""Degree reduction by embedding-preserving vertex expansion.

A vertex of degree d > 3 is replaced by a path of d - 2 copies threaded
through its rotation order: the first and last copy each host two of the
original edge ends, every middle copy hosts one.  Walking the boundary of
the expanded path meets the original edges in the original counterclockwise
order, so the rotation system stays a planar embedding.  The path edges are
marked undeletable; connectivity between original ids is preserved under
any deletion sequence of deletable edges.
"""

from dataclasses import dataclass

from .graph import PlanarGraph


@dataclass
class VertexMap:
    forward: list[list[int]]  # original id -> copy ids (first copy = original id)
    back: list[int]           # expanded id -> original id

    def primary(self, v: int) -> int:
        return self.forward[v][0]

    @classmethod
    def identity(cls, n: int) -> "VertexMap":
        return cls(forward=[[v] for v in range(n)], back=list(range(n)))


def reduce_degree(g: PlanarGraph) -> tuple[PlanarGraph, VertexMap]:
    """Expand every vertex of degree > 3; returns the new graph and id map."""
    if g.edge_count_alive != g.edge_count:
        raise ValueError("degree reduction must run before any deletion")
    n = g.vertex_count
    rotations_in = [list(g.out_half_edges(v)) for v in range(n)]
    if all(len(hs) <= 3 for hs in rotations_in):
        out = g.clone()
        return out, VertexMap.identity(n)

    forward: list[list[int]] = [[] for _ in range(n)]
    back: list[int] = list(range(n))
    next_id = n
    host: dict[int, int] = {}  # half-edge of g -> hosting copy id
    copy_rotations: dict[int, list] = {}  # copy id -> rotation entries
    # entries are ('o', original half-edge) or ('p', path edge index)
    path_edges: list[tuple[int, int]] = []

    for v in range(n):
        hs = rotations_in[v]
        d = len(hs)
        if d <= 3:
            forward[v] = [v]
            copy_rotations[v] = [("o", h) for h in hs]
            for h in hs:
                host[h] = v
            continue
        k = d - 2
        copies = [v]
        for _ in range(k - 1):
            copies.append(next_id)
            back.append(v)
            next_id += 1
        forward[v] = copies
        links = []
        for j in range(k - 1):
            links.append(len(path_edges))
            path_edges.append((copies[j], copies[j + 1]))
        # slot assignment: copy 0 -> hs[0], hs[1]; copy j -> hs[j + 1];
        # last copy -> hs[d-2], hs[d-1]
        copy_rotations[copies[0]] = [("o", hs[0]), ("o", hs[1]), ("p", links[0])]
        for j in range(1, k - 1):
            copy_rotations[copies[j]] = [("p", links[j - 1]), ("o", hs[j + 1]),
                                         ("p", links[j])]
        copy_rotations[copies[k - 1]] = [("p", links[k - 2]), ("o", hs[d - 2]),
                                         ("o", hs[d - 1])]
        host[hs[0]] = copies[0]
        host[hs[1]] = copies[0]
        for j in range(1, k - 1):
            host[hs[j + 1]] = copies[j]
        host[hs[d - 2]] = copies[k - 1]
        host[hs[d - 1]] = copies[k - 1]

    m = g.edge_count
    edges: list[tuple[int, int]] = []
    for e in range(m):
        edges.append((host[2 * e], host[2 * e + 1]))  # keep edge orientation
    first_path_edge = m
    for u, w in path_edges:
        edges.append((u, w))

    rotations_out: list[list[int]] = []
    for c in range(next_id):
        entries = copy_rotations.get(c, [])
        rotations_out.append([ref // 2 if kind == "o" else first_path_edge + ref
                              for kind, ref in entries])

    out = PlanarGraph.from_rotations(next_id, edges, rotations_out)
    for e in range(first_path_edge, len(edges)):
        out.deletable[e] = False
    for e in range(m):
        out.deletable[e] = g.deletable[e]
    return out, VertexMap(forward=forward, back=back)
