"""Edge-induced subgraph extraction with inherited rotation order."""

from .graph import NO_EDGE, PlanarGraph


def induced_by_edges(g: PlanarGraph, edge_ids: list[int]):
    """Build the subgraph induced by the given alive edges of g.

    Local vertex ids are assigned in increasing global order; local edge i
    corresponds to edge_ids[i].  Rotation order is inherited, so the result
    is again a planar embedding.  Returns (sub, vertices, to_local) where
    vertices maps local -> global ids and to_local the reverse.
    """
    head = g.head
    local_edge = {}
    verts: set[int] = set()
    for i, e in enumerate(edge_ids):
        local_edge[e] = i
        verts.add(head[2 * e])
        verts.add(head[2 * e + 1])
    vertices = sorted(verts)
    to_local = {v: i for i, v in enumerate(vertices)}
    m = len(edge_ids)

    sub = PlanarGraph(len(vertices))
    sub.head = [0] * (2 * m)
    sub.rotation_next = [NO_EDGE] * (2 * m)
    sub.rotation_prev = [NO_EDGE] * (2 * m)
    sub.alive = [True] * m
    sub.deletable = [g.deletable[e] for e in edge_ids]
    sub.edge_count_alive = m
    for i, e in enumerate(edge_ids):
        sub.head[2 * i] = to_local[head[2 * e]]
        sub.head[2 * i + 1] = to_local[head[2 * e + 1]]

    rot = g.rotation_next
    s_next, s_prev, s_first = sub.rotation_next, sub.rotation_prev, sub.first_out
    for v in vertices:
        lv = to_local[v]
        h0 = g.first_out[v]
        locs = []
        h = h0
        while True:
            le = local_edge.get(h >> 1)
            if le is not None:
                locs.append(2 * le + (h & 1))
            h = rot[h]
            if h == h0:
                break
        s_first[lv] = locs[0]
        prev = locs[-1]
        for lh in locs:
            s_next[prev] = lh
            s_prev[lh] = prev
            prev = lh
    return sub, vertices, to_local
