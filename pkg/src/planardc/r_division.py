"""r-divisions: construction by recursive separator splitting, a checker,
and the loosened semantics under deletion.

The graph is first made biconnected and triangulated, the augmented edge
set is split recursively, and the augmentation edges are then removed, so
the returned division partitions exactly the input's edges.  Region
membership and boundary sets are frozen at construction time: deleting
edges later never changes them (regions may come to contain isolated
vertices, and a boundary vertex may end up incident to a single region).

Splitting is a two-regime separator on each oversized piece: if some BFS
level is small and weight-balanced it is the separator; otherwise every
level is large, hence the BFS tree is shallow, and a fundamental cycle of
that tree (of length at most twice the depth plus one) found through the
dual tree of a retriangulated copy is used instead.  Pieces are split by
vertex count first, then pieces with too many boundary vertices are split
again with all weight on their boundary.

The quality constants asserted by the checker are committed here; the
constructions cited for linear-time r-divisions are out of scope and this
builder is O(n log n)-ish, which is why construction is excluded from the
decremental-phase work accounting.
"""

import math
from dataclasses import dataclass, field

from .planar_core import PlanarGraph, augment_biconnect_triangulate
from .planar_core.faces import _face_walks
from .planar_core.subgraph import induced_by_edges

# committed budget constants, validated empirically by the checker
REGION_BOUNDARY_FACTOR = 8   # per-region boundary <= 8 sqrt(r)
TOTAL_BOUNDARY_FACTOR = 8    # |boundary(P)| <= 8 n / sqrt(r)
REGION_COUNT_FACTOR = 8      # region count <= 8 n / r

_SPLIT_BOUNDARY_TARGET = 4.0  # internal phase-2 trigger, in units of sqrt(r)
_LEVEL_SIZE_FACTOR = 4.0      # a BFS level counts as small below 4 sqrt(k)
_BALANCE = 2.0 / 3.0


@dataclass
class Region:
    edges: list[int]
    vertices: list[int]
    boundary: list[int]


@dataclass
class Division:
    r: int
    regions: list[Region]
    boundary: set[int]                    # global boundary vertex set
    region_of_edge: dict[int, int]        # edge id -> region id
    regions_of_vertex: dict[int, list[int]]

    @property
    def region_count(self) -> int:
        return len(self.regions)


@dataclass
class DivisionReport:
    region_count: int
    max_region_vertices: int
    max_region_boundary: int
    total_boundary: int
    achieved: dict[str, float] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# splitting machinery
# ---------------------------------------------------------------------------

class _Piece:
    """Local adjacency view of an edge subset of the augmented graph."""

    __slots__ = ("edges", "vertices", "to_local", "adj", "weight")

    def __init__(self, g: PlanarGraph, edges: list[int], weight_of=None):
        self.edges = edges
        head = g.head
        verts: set[int] = set()
        for e in edges:
            verts.add(head[2 * e])
            verts.add(head[2 * e + 1])
        self.vertices = sorted(verts)
        self.to_local = {v: i for i, v in enumerate(self.vertices)}
        k = len(self.vertices)
        self.adj: list[list[int]] = [[] for _ in range(k)]
        to_local = self.to_local
        for e in edges:
            lu, lw = to_local[head[2 * e]], to_local[head[2 * e + 1]]
            self.adj[lu].append(lw)
            self.adj[lw].append(lu)
        if weight_of is None:
            self.weight = [1] * k
        else:
            self.weight = [weight_of(v) for v in self.vertices]

    def components(self) -> list[list[int]]:
        k = len(self.vertices)
        seen = [False] * k
        out = []
        for s in range(k):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(comp)
        return out

    def bfs_levels(self, root: int):
        k = len(self.vertices)
        level = [-1] * k
        level[root] = 0
        order = [root]
        head = 0
        while head < len(order):
            v = order[head]
            head += 1
            lv = level[v] + 1
            for w in self.adj[v]:
                if level[w] == -1:
                    level[w] = lv
                    order.append(w)
        return level, order


def _bin_pack(groups: list[tuple[int, list[int]]]) -> tuple[set[int], set[int]]:
    """Assign weighted vertex groups to two sides, heaviest first."""
    side1: set[int] = set()
    side2: set[int] = set()
    w1 = w2 = 0
    for w, members in sorted(groups, key=lambda t: (-t[0], t[1])):
        # break weight ties by member count so zero-weight groups still spread
        if (w1, len(side1)) <= (w2, len(side2)):
            side1.update(members)
            w1 += w
        else:
            side2.update(members)
            w2 += w
    return side1, side2


def _assign_edges(g, edges, side1: set[int], side2: set[int]):
    """Partition piece edges by endpoint side; separator-only edges go to e1."""
    e1, e2 = [], []
    head = g.head
    for e in edges:
        u, w = head[2 * e], head[2 * e + 1]
        if u in side1 or w in side1:
            e1.append(e)
        elif u in side2 or w in side2:
            e2.append(e)
        else:
            e1.append(e)
    return e1, e2


def _split_edges(g: PlanarGraph, edges: list[int], weight_of=None):
    """Split one piece into two edge sets along a small balanced separator."""
    piece = _Piece(g, edges, weight_of)
    k = len(piece.vertices)
    total_w = sum(piece.weight)

    comps = piece.components()
    if len(comps) > 1:
        groups = [(sum(piece.weight[v] for v in c), [piece.vertices[v] for v in c])
                  for c in comps]
        side1, side2 = _bin_pack(groups)
        return _assign_edges(g, edges, side1, side2)

    level, order = piece.bfs_levels(0)
    cand = _level_candidate(piece, level, order, k, total_w)
    if cand is not None:
        side1, side2 = cand
        return _assign_edges(g, edges, side1, side2)
    return _cycle_split(g, piece, edges, total_w)


def _level_candidate(piece, level, order, k, total_w):
    """Best single BFS level that is small and separates with balance."""
    h = max(level)
    if h < 1:
        return None
    counts = [0] * (h + 1)
    weights = [0] * (h + 1)
    for v, lv in enumerate(level):
        counts[lv] += 1
        weights[lv] += piece.weight[v]
    cum = [0] * (h + 2)
    for l in range(h + 1):
        cum[l + 1] = cum[l] + weights[l]
    size_cap = _LEVEL_SIZE_FACTOR * math.sqrt(k) + 1
    best = None
    for l in range(1, h + 1):
        if counts[l] > size_cap:
            continue
        above = cum[l]
        below = total_w - cum[l + 1]
        score = max(above, below)
        if best is None or score < best[0]:
            best = (score, l)
    if best is None or best[0] > _BALANCE * total_w + 1:
        return None
    l = best[1]
    side1 = {piece.vertices[v] for v in range(k) if level[v] < l}
    side2 = {piece.vertices[v] for v in range(k) if level[v] > l}
    if not side1 or not side2:
        return None
    return side1, side2


def _cycle_split(g, piece, edges, total_w):
    """Fundamental-cycle separator through a retriangulated piece copy."""
    sub, verts, _ = induced_by_edges(g, edges)
    tri, _added = augment_biconnect_triangulate(sub)
    k = tri.vertex_count
    # BFS tree of the triangulated piece
    parent = [-1] * k
    depth = [0] * k
    seen = [False] * k
    seen[0] = True
    order = [0]
    pos = 0
    tree_edge = [False] * tri.edge_count
    thead, trot, tfirst = tri.head, tri.rotation_next, tri.first_out
    while pos < len(order):
        v = order[pos]
        pos += 1
        h0 = tfirst[v]
        hh = h0
        while True:
            w = thead[hh]
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                depth[w] = depth[v] + 1
                tree_edge[hh >> 1] = True
                order.append(w)
            hh = trot[hh]
            if hh == h0:
                break

    face_of, walks = _face_walks(tri)
    walk_count = len(walks)
    home_weight = [0] * walk_count
    lw = {pv: piece.weight[pl] for pl, pv in enumerate(piece.vertices)}
    for v in range(k):
        h0 = tri.first_out[v]
        if h0 >= 0:
            home_weight[face_of[h0]] += lw.get(verts[v], 0)

    # dual tree over faces through non-tree edges; subtree weights by DP
    dual_adj: list[list[tuple[int, int]]] = [[] for _ in range(walk_count)]
    nontree = []
    for e in range(tri.edge_count):
        if tree_edge[e]:
            continue
        f1, f2 = face_of[2 * e], face_of[2 * e + 1]
        dual_adj[f1].append((f2, e))
        dual_adj[f2].append((f1, e))
        nontree.append(e)
    if not nontree:
        # piece is a tree: split at a weighted centroid-ish vertex instead
        return _tree_split(g, piece, edges, total_w)

    dparent = [-1] * walk_count
    dparent_edge = [-1] * walk_count
    dorder = [0]
    dseen = [False] * walk_count
    dseen[0] = True
    head = 0
    while head < len(dorder):
        f = dorder[head]
        head += 1
        for f2, e in dual_adj[f]:
            if not dseen[f2]:
                dseen[f2] = True
                dparent[f2] = f
                dparent_edge[f2] = e
                dorder.append(f2)
    subtree = home_weight[:]
    for f in reversed(dorder):
        p = dparent[f]
        if p >= 0:
            subtree[p] += subtree[f]

    # candidate cycles: non-tree edges whose enclosed weight is nearest W/2
    cands = []
    for f in dorder[1:]:
        e = dparent_edge[f]
        inside = subtree[f]
        cands.append((abs(total_w / 2 - inside), e))
    cands.sort()

    best = None
    for _, e in cands[:10]:
        u, w = tri.endpoints(e)
        cyc = _tree_cycle(parent, depth, u, w)
        sep = {verts[v] for v in cyc}
        score, sides = _evaluate_separator(piece, sep)
        if best is None or (score, len(sep)) < best[0]:
            best = ((score, len(sep)), sides)
        if score <= _BALANCE * total_w + 1:
            break
    return _assign_edges(g, edges, best[1][0], best[1][1])


def _tree_cycle(parent, depth, u, w):
    cyc = []
    while depth[u] > depth[w]:
        cyc.append(u)
        u = parent[u]
    tail = []
    while depth[w] > depth[u]:
        tail.append(w)
        w = parent[w]
    while u != w:
        cyc.append(u)
        tail.append(w)
        u = parent[u]
        w = parent[w]
    cyc.append(u)
    cyc.extend(reversed(tail))
    return cyc


def _evaluate_separator(piece, sep: set[int]):
    """Exact side weights when removing sep; returns (max side weight, sides)."""
    k = len(piece.vertices)
    to_local = piece.to_local
    sep_local = {to_local[v] for v in sep if v in to_local}
    seen = [False] * k
    for v in sep_local:
        seen[v] = True
    groups = []
    for s in range(k):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for nb in piece.adj[v]:
                if not seen[nb]:
                    seen[nb] = True
                    comp.append(nb)
                    stack.append(nb)
        groups.append((sum(piece.weight[v] for v in comp),
                       [piece.vertices[v] for v in comp]))
    side1, side2 = _bin_pack(groups)
    w1 = sum(piece.weight[to_local[v]] for v in side1)
    w2 = sum(piece.weight[to_local[v]] for v in side2)
    return max(w1, w2), (side1, side2)


def _tree_split(g, piece, edges, total_w):
    """Split a tree piece at a weighted centroid."""
    k = len(piece.vertices)
    best = None
    for v in range(k):
        score, sides = _evaluate_separator(piece, {piece.vertices[v]})
        if best is None or score < best[0]:
            best = (score, sides)
    return _assign_edges(g, edges, best[1][0], best[1][1])


# ---------------------------------------------------------------------------
# build / check / dump
# ---------------------------------------------------------------------------

def build(g: PlanarGraph, r: int, max_rounds: int = 64) -> Division:
    """Construct an r-division of g (simple; augmentation applied internally).

    Region vertex sets, membership maps and boundary sets reflect the input
    edge set: augmentation edges are used only to guide the splitting and
    are removed before any bookkeeping is frozen.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    n = g.vertex_count
    alive = list(g.alive_edges())
    if n <= r or not alive:
        vertices = list(range(n))
        region = Region(edges=alive, vertices=vertices, boundary=[])
        return Division(r=r, regions=[region], boundary=set(),
                        region_of_edge={e: 0 for e in alive},
                        regions_of_vertex={v: [0] for v in vertices})

    aug, added = augment_biconnect_triangulate(g)
    added_set = set(added)

    # phase 1: split by vertex count
    done: list[list[int]] = []
    todo: list[list[int]] = [list(aug.alive_edges())]
    while todo:
        p = todo.pop()
        if _piece_vertex_count(aug, p) <= r:
            done.append(p)
            continue
        e1, e2 = _split_edges(aug, p)
        if not e1 or not e2:
            e1, e2 = p[: len(p) // 2], p[len(p) // 2:]
        todo.append(e1)
        todo.append(e2)

    # phase 2: split pieces with too many (real-edge) boundary vertices,
    # maintaining the vertex -> piece multiplicity incrementally
    target = _SPLIT_BOUNDARY_TARGET * math.sqrt(r)
    piece_verts = [_real_vertices(aug, p, added_set) for p in done]
    mult: dict[int, int] = {}
    for vs in piece_verts:
        for v in vs:
            mult[v] = mult.get(v, 0) + 1
    work = list(range(len(done)))
    rounds = 0
    cap = max_rounds * max(len(done), 1)
    while work and rounds < cap:
        i = work.pop()
        bset = {v for v in piece_verts[i] if mult.get(v, 0) >= 2}
        if len(bset) <= target:
            continue
        rounds += 1
        e1, e2 = _split_edges(aug, done[i], weight_of=lambda v: 1 if v in bset else 0)
        if not e1 or not e2:
            continue
        for v in piece_verts[i]:
            mult[v] -= 1
        done[i] = e1
        done.append(e2)
        piece_verts[i] = _real_vertices(aug, e1, added_set)
        piece_verts.append(_real_vertices(aug, e2, added_set))
        for j in (i, len(done) - 1):
            for v in piece_verts[j]:
                mult[v] = mult.get(v, 0) + 1
            work.append(j)

    # drop augmentation edges, then freeze membership on real edges
    regions_edges = []
    for p in done:
        real = [e for e in p if e not in added_set]
        if real:
            regions_edges.append(real)
    return _freeze(g, r, regions_edges)


def _piece_vertex_count(g, edges) -> int:
    head = g.head
    verts = set()
    for e in edges:
        verts.add(head[2 * e])
        verts.add(head[2 * e + 1])
    return len(verts)


def _real_vertices(g, edges, added_set) -> set[int]:
    head = g.head
    verts = set()
    for e in edges:
        if e in added_set:
            continue
        verts.add(head[2 * e])
        verts.add(head[2 * e + 1])
    return verts


def _freeze(g: PlanarGraph, r: int, regions_edges: list[list[int]]) -> Division:
    region_of_edge: dict[int, int] = {}
    regions_of_vertex: dict[int, list[int]] = {}
    vertex_lists: list[list[int]] = []
    for rid, es in enumerate(regions_edges):
        verts = set()
        for e in es:
            if e in region_of_edge:
                raise ValueError(f"edge {e} assigned to two regions")
            region_of_edge[e] = rid
            u, w = g.endpoints(e)
            verts.add(u)
            verts.add(w)
        vs = sorted(verts)
        vertex_lists.append(vs)
        for v in vs:
            regions_of_vertex.setdefault(v, []).append(rid)
    boundary = {v for v, rs in regions_of_vertex.items() if len(rs) >= 2}
    regions = []
    for rid, es in enumerate(regions_edges):
        bd = sorted(v for v in vertex_lists[rid] if v in boundary)
        regions.append(Region(edges=sorted(es), vertices=vertex_lists[rid],
                              boundary=bd))
    return Division(r=r, regions=regions, boundary=boundary,
                    region_of_edge=region_of_edge,
                    regions_of_vertex=regions_of_vertex)


def check(g: PlanarGraph, d: Division) -> DivisionReport:
    """Validate the division against the committed quality budgets.

    check is deletion-oblivious: it validates the frozen construction-time
    data, so it may be run before or after edges are deleted.
    """
    n = g.vertex_count
    violations = []
    seen_edges: dict[int, int] = {}
    for rid, region in enumerate(d.regions):
        for e in region.edges:
            if e in seen_edges:
                violations.append(f"edge {e} in regions {seen_edges[e]} and {rid}")
            seen_edges[e] = rid
            if d.region_of_edge.get(e) != rid:
                violations.append(f"edge {e} map disagrees with region {rid}")
        region_verts = set(region.vertices)
        for v in region.vertices:
            if rid not in d.regions_of_vertex.get(v, ()):
                violations.append(f"vertex {v} missing region {rid} in membership map")
        for e in region.edges:
            u, w = g.endpoints(e)
            if u not in region_verts or w not in region_verts:
                violations.append(f"edge {e} endpoint outside region {rid}")
    for e in range(g.edge_count):
        if g.alive[e] and e not in seen_edges:
            violations.append(f"alive edge {e} not covered by any region")

    max_rv = max((len(rg.vertices) for rg in d.regions), default=0)
    max_rb = max((len(rg.boundary) for rg in d.regions), default=0)
    total_b = len(d.boundary)
    sqrt_r = math.sqrt(d.r)
    if max_rv > d.r:
        violations.append(f"region vertex count {max_rv} exceeds r={d.r}")
    if max_rb > REGION_BOUNDARY_FACTOR * sqrt_r:
        violations.append(
            f"region boundary {max_rb} exceeds {REGION_BOUNDARY_FACTOR}*sqrt(r)"
            f"={REGION_BOUNDARY_FACTOR * sqrt_r:.1f}")
    if total_b > TOTAL_BOUNDARY_FACTOR * n / sqrt_r:
        violations.append(
            f"total boundary {total_b} exceeds {TOTAL_BOUNDARY_FACTOR}*n/sqrt(r)"
            f"={TOTAL_BOUNDARY_FACTOR * n / sqrt_r:.1f}")
    if len(d.regions) > max(1.0, REGION_COUNT_FACTOR * n / d.r):
        violations.append(
            f"region count {len(d.regions)} exceeds {REGION_COUNT_FACTOR}*n/r"
            f"={REGION_COUNT_FACTOR * n / d.r:.1f}")
    achieved = {
        "region_vertices_over_r": max_rv / d.r if d.r else 0.0,
        "region_boundary_over_sqrt_r": max_rb / sqrt_r,
        "total_boundary_over_n_per_sqrt_r": total_b * sqrt_r / n if n else 0.0,
        "region_count_over_n_per_r": len(d.regions) * d.r / n if n else 0.0,
    }
    return DivisionReport(region_count=len(d.regions),
                          max_region_vertices=max_rv,
                          max_region_boundary=max_rb,
                          total_boundary=total_b,
                          achieved=achieved,
                          violations=violations)


def dump(d: Division) -> str:
    """Debug text: one line per region with vertex, boundary and edge ids."""
    lines = []
    for rid, region in enumerate(d.regions):
        lines.append(
            f"{rid} V {' '.join(map(str, region.vertices))}"
            f" B {' '.join(map(str, region.boundary))}"
            f" E {' '.join(map(str, region.edges))}")
    return "\n".join(lines) + "\n"
