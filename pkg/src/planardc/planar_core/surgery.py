"""Embedding-preserving edge insertion: connect, biconnect, triangulate.

All additions go through two corner-splice primitives.  add_chord(g, g1, g2)
adds an edge between head(g1) and head(g2) where g1 and g2 lie on a common
face walk; the new edge is drawn inside that face, splitting its walk in
two.  add_edge_to_isolated attaches a vertex with no incident edges into
the face walk at a given position.  Both keep the rotation system a valid
planar embedding, which is what lets the augmented graph be handed to the
r-division builder and the added edges deleted again afterwards.
"""

from ..errors import InvariantError
from .faces import _face_walks
from .graph import NO_EDGE, PlanarGraph


def add_chord(g: PlanarGraph, g1: int, g2: int) -> int:
    """Insert edge (head(g1), head(g2)) right after walk positions g1, g2.

    The new walk order is: ... g1 -> 2e ... and ... g2 -> 2e+1 ..., i.e.
    half-edge 2e runs head(g1) -> head(g2).
    """
    a, b = g.head[g1], g.head[g2]
    if a == b:
        raise InvariantError("chord endpoints coincide; would create a self-loop")
    e = g._append_edge(a, b)
    p, q = 2 * e, 2 * e + 1
    g.insert_half_edge_after(g1 ^ 1, p)
    g.insert_half_edge_after(g2 ^ 1, q)
    g.edge_count_alive += 1
    return e

def add_edge_to_isolated(g: PlanarGraph, g1: int, b: int) -> int:
    """Insert edge (head(g1), b) where b currently has no alive edges."""
    if g.first_out[b] != NO_EDGE:
        raise InvariantError(f"vertex {b} is not isolated")
    a = g.head[g1]
    e = g._append_edge(a, b)
    p, q = 2 * e, 2 * e + 1
    g.insert_half_edge_after(g1 ^ 1, p)
    g.rotation_next[q] = q
    g.rotation_prev[q] = q
    g.first_out[b] = q
    g.edge_count_alive += 1
    return e


def _connect(g: PlanarGraph) -> list[int]:
    """Chain all components together inside the shared unbounded face."""
    labels = g.component_labels()
    count = max(labels) + 1 if labels else 0
    if count <= 1:
        return []
    # anchor per component: its lowest alive half-edge, else the bare vertex
    anchor_edge = [NO_EDGE] * count
    anchor_vertex = [-1] * count
    for v in range(g.vertex_count - 1, -1, -1):
        anchor_vertex[labels[v]] = v
    for e in range(len(g.alive) - 1, -1, -1):
        if g.alive[e]:
            anchor_edge[labels[g.head[2 * e]]] = 2 * e
    order = sorted(range(count), key=lambda c: anchor_vertex[c])
    added = []
    src = anchor_edge[order[0]]
    src_vertex = anchor_vertex[order[0]]
    for c in order[1:]:
        tgt, tv = anchor_edge[c], anchor_vertex[c]
        if src == NO_EDGE and tgt == NO_EDGE:
            e = g.add_edge_isolated(src_vertex, tv)
        elif src == NO_EDGE:
            e = add_edge_to_isolated(g, tgt, src_vertex)
        elif tgt == NO_EDGE:
            e = add_edge_to_isolated(g, src, tv)
        else:
            e = add_chord(g, src, tgt)
        added.append(e)
        src = 2 * e
        src_vertex = g.head[2 * e]
    return added


def _edge_bicomps(g: PlanarGraph) -> list[int]:
    """Biconnected-component id per alive edge (iterative lowpoint DFS)."""
    n = g.vertex_count
    comp = [-1] * len(g.alive)
    disc = [-1] * n
    low = [0] * n
    head = g.head
    rot = g.rotation_next
    first = g.first_out
    DONE = -2
    timer = 0
    next_comp = 0
    for root in range(n):
        if disc[root] != -1 or first[root] == NO_EDGE:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[int] = []
        # frame: [vertex, parent edge (unskipped yet, else -1), h0, next h]
        stack = [[root, -1, first[root], first[root]]]
        while stack:
            frame = stack[-1]
            v, h0, h = frame[0], frame[2], frame[3]
            pushed_child = False
            while h != DONE:
                nxt = rot[h]
                frame[3] = nxt if nxt != h0 else DONE
                e = h >> 1
                if e == frame[1]:
                    frame[1] = -1  # skip the edge back to the parent once
                    h = frame[3]
                    continue
                w = head[h]
                if disc[w] == -1:
                    edge_stack.append(e)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append([w, e, first[w], first[w]])
                    pushed_child = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                h = frame[3]
            if pushed_child:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    while edge_stack:
                        e = edge_stack.pop()
                        comp[e] = next_comp
                        a, b = head[2 * e], head[2 * e + 1]
                        if (a == u and b == v) or (a == v and b == u):
                            break
                    next_comp += 1
    return comp


def _biconnect(g: PlanarGraph) -> list[int]:
    """One corner pass making a connected graph (n >= 3) biconnected.

    At every corner (h1, h2) of a vertex whose two edges lie in different
    biconnected components, a chord between the corner's neighbours is
    added inside the incident face, merging the components.  Merges are
    tracked in a union-find over the initial component ids; an added chord
    (u, w) cannot already exist, since the edge u-w would have put the
    corner's edges in one component to begin with.
    """
    from ..union_find import Dsu

    comp = _edge_bicomps(g)
    n_comp = max(comp, default=-1) + 1
    if n_comp <= 1:
        return []
    dsu = Dsu(n_comp)
    comp_of = dict(enumerate(comp))
    added = []
    for v in range(g.vertex_count):
        hs = list(g.out_half_edges(v))
        if len(hs) < 2:
            continue
        for i, h1 in enumerate(hs):
            h2 = hs[(i + 1) % len(hs)]
            if comp_of[h1 // 2] == comp_of[h2 // 2]:
                continue
            c1 = dsu.find(comp_of[h1 // 2])
            c2 = dsu.find(comp_of[h2 // 2])
            if c1 == c2:
                continue
            # walk predecessor of twin(h1) has head = head(h1)
            g1 = g.rotation_prev[h1 ^ 1] ^ 1
            e = add_chord(g, g1, h2)
            dsu.union(c1, c2)
            comp_of[e] = c1
            added.append(e)
    return added


def _triangulate(g: PlanarGraph) -> list[int]:
    """Add chords until every face walk of the biconnected graph is a triangle.

    Each face of a simple biconnected plane graph is a simple cycle, so it
    is corner-clipped: preferentially fanning from the corner next to the
    face's minimum-id vertex, skipping corners whose chord already exists
    elsewhere in the graph (two such skip-chords of one face would have to
    cross outside it, so a clippable corner always remains).
    """
    adjacent = set()
    for e in g.alive_edges():
        a, b = g.endpoints(e)
        adjacent.add((a, b) if a < b else (b, a))
    added = []
    _, walks = _face_walks(g)
    for walk in walks:
        k = len(walk)
        if k <= 3:
            continue
        nxt = list(range(1, k)) + [0]
        prv = [k - 1] + list(range(k - 1))
        half = walk[:]  # half-edge at each live position
        apex_pos = min(range(k), key=lambda i: g.head[half[i]])
        cur = nxt[apex_pos]
        size = k
        fails = 0
        while size > 3:
            ip, i, inx = prv[cur], cur, nxt[cur]
            a, c = g.head[half[ip]], g.head[half[inx]]
            key = (a, c) if a < c else (c, a)
            if a != c and key not in adjacent:
                e = add_chord(g, half[ip], half[inx])
                adjacent.add(key)
                added.append(e)
                # positions i and inx collapse into one holding the new chord
                half[inx] = 2 * e
                nxt[ip] = inx
                prv[inx] = ip
                cur = inx
                size -= 1
                fails = 0
            else:
                cur = nxt[cur]
                fails += 1
                if fails > size:
                    raise InvariantError("face cannot be triangulated")
    return added


def augment_biconnect_triangulate(g: PlanarGraph) -> tuple[PlanarGraph, list[int]]:
    """Return a connected, biconnected, triangulated supergraph of g.

    The input is not modified.  The returned edge-id list contains exactly
    the new edges, so deleting them from the result restores the input
    edge set.  Graphs with fewer than 3 vertices are only connected.
    """
    out = g.clone()
    added = _connect(out)
    if out.vertex_count >= 3:
        added += _biconnect(out)
        added += _triangulate(out)
    return out, added
