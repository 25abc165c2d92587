"""Skeleton graphs over an r-division and the generic level combinator.

A level runs one inner decremental-connectivity instance per region and
summarizes cross-region connectivity in a skeleton graph: the skeleton set
(all boundary vertices plus this level's explicit set) plus one auxiliary
vertex per per-region connectivity class, wired as stars.  Two skeleton
vertices are skeleton-connected iff they are connected in the full graph.

Per deletion: the owning region's inner instance reports which of its
explicit vertices changed local identifier; that report drives the star
surgery in time linear in its length.  The skeleton's component count
rises iff the deletion was critical in the whole graph AND the report
separated two skeleton vertices inside the region; only then are global
identifiers on the smaller skeleton side refreshed, reusing the lockstep
search and tie rule of the baseline.

Identifier lookup for an arbitrary vertex asks its region for a local
identifier; if some skeleton vertex in that region currently shares it,
that vertex's global identifier is returned, otherwise a tagged composite
of (region, compacted local identifier).  Queries are identifier equality,
so they cost a constant number of inner calls.
"""

import math

from .bridge_monitor import DualComplement
from .cc_ids import IdAllocator, composite_id
from .counters import Counters
from .dc_base import BaseState
from .errors import InvariantError
from .lockstep import smaller_side
from .micro_dc import CAPACITY as MICRO_CAPACITY
from .micro_dc import MicroDc, shared_table
from .planar_core import PlanarGraph
from .planar_core.subgraph import induced_by_edges
from . import r_division

MICRO_THRESHOLD = 64  # below this, skip levels entirely


def level_r(n: int) -> int:
    """Region parameter for one level over an n-vertex graph."""
    return max(1, math.ceil(math.log2(max(n, 2)) ** 2))


class AuxClass:
    """Auxiliary skeleton vertex for one per-region connectivity class."""

    __slots__ = ("key", "members")

    def __init__(self, key, members):
        self.key = key          # (region id, local cc id) at creation
        self.members = members  # set of skeleton vertex ids


class SkeletonGraph:
    """Star-wired connectivity summary over the skeleton set."""

    def __init__(self):
        self.classes: dict[tuple[int, int], AuxClass] = {}
        self.membership: dict[int, dict[int, AuxClass]] = {}
        self.cc_of: dict = {}  # int vertex or AuxClass -> global cc id

    @property
    def aux_count(self) -> int:
        return len(self.classes)

    @property
    def vertex_count(self) -> int:
        return len(self.membership) + len(self.classes)

    @property
    def edge_count(self) -> int:
        return sum(len(c.members) for c in self.classes.values())

    def neighbors(self, node):
        if isinstance(node, int):
            return self.membership[node].values()
        return node.members

    def connected(self, x: int, y: int) -> bool:
        """Plain search, for validation; algorithms use cc identifiers."""
        if x == y:
            return True
        seen = {x}
        stack = [x]
        while stack:
            node = stack.pop()
            for nb in self.neighbors(node):
                if nb is y or nb == y:
                    return True
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return False


def build_skeleton(division: r_division.Division, v_s: set[int],
                   local_id_of) -> SkeletonGraph:
    """Group each region's skeleton vertices by local identifier.

    local_id_of(rid, v) must give the region's current cc identifier of
    skeleton vertex v.  Every boundary vertex of the division must be in
    v_s.
    """
    missing = division.boundary - v_s
    if missing:
        raise ValueError(
            f"skeleton set is missing boundary vertices, e.g. {min(missing)}")
    sk = SkeletonGraph()
    for v in v_s:
        sk.membership[v] = {}
    for rid, region in enumerate(division.regions):
        groups: dict[int, set[int]] = {}
        for v in region.vertices:
            if v in sk.membership:
                groups.setdefault(local_id_of(rid, v), set()).add(v)
        for lid, members in groups.items():
            cls = AuxClass((rid, lid), members)
            sk.classes[(rid, lid)] = cls
            for v in members:
                sk.membership[v][rid] = cls
    return sk


class LevelState:
    """One combinator level: division + per-region inners + skeleton."""

    def __init__(self, g: PlanarGraph, explicit: set[int], r: int,
                 inner_factory, counters: Counters | None = None,
                 division: r_division.Division | None = None):
        self.graph = g
        self.counters = counters if counters is not None else Counters()
        self.monitor = DualComplement.attach(g, self.counters)
        self.division = division if division is not None else r_division.build(g, r)
        self.explicit = frozenset(explicit or ())
        self.v_s = set(self.division.boundary)
        self.v_s.update(v for v in self.explicit
                        if v in self.division.regions_of_vertex)
        self.ids = IdAllocator()

        # region subgraphs and inner instances
        d = self.division
        self.inner: list = []
        self.region_verts: list[list[int]] = []   # local -> global
        self.region_local: list[dict[int, int]] = []  # global -> local
        self.edge_local: dict[int, tuple[int, int]] = {}
        for rid, region in enumerate(d.regions):
            sub, verts, to_local = induced_by_edges(g, region.edges)
            for i, e in enumerate(region.edges):
                self.edge_local[e] = (rid, i)
            inner_explicit = {to_local[v] for v in region.vertices if v in self.v_s}
            self.inner.append(inner_factory(sub, inner_explicit, self.counters))
            self.region_verts.append(verts)
            self.region_local.append(to_local)

        # skeleton over current local identifiers
        self.skeleton = build_skeleton(
            d, self.v_s, lambda rid, v: self._local_cc(rid, v))
        self._assign_initial_globals()

        # vertices in no region at construction: permanently isolated
        self._lonely: dict[int, int] = {}
        for v in range(g.vertex_count):
            if v not in d.regions_of_vertex:
                self._lonely[v] = self.ids.fresh()

        # composite-id compaction, per region
        self._alias: list[dict[int, int]] = [{} for _ in d.regions]

        self.skeleton_relabels = 0
        size_cap = len(self.v_s) + sum(
            len([v for v in rg.vertices if v in self.v_s]) for rg in d.regions)
        self._skeleton_relabel_bound = max(size_cap, 1) * (max(size_cap, 1).bit_length())
        self.change_log: list[list[tuple[int, int]]] = []
        self.last_critical = False

    # -- internals ---------------------------------------------------------

    def _local_cc(self, rid: int, v: int) -> int:
        self.counters.inner_calls += 1
        return self.inner[rid].cc_id(self.region_local[rid][v])

    def _assign_initial_globals(self):
        sk = self.skeleton
        for v in sorted(sk.membership):
            if v in sk.cc_of:
                continue
            gid = self.ids.fresh()
            stack = [v]
            sk.cc_of[v] = gid
            while stack:
                node = stack.pop()
                for nb in sk.neighbors(node):
                    if nb not in sk.cc_of:
                        sk.cc_of[nb] = gid
                        stack.append(nb)

    # -- operations ---------------------------------------------------------

    def delete(self, e: int) -> list[tuple[int, int]]:
        critical = self.monitor.on_delete(e)
        self.graph.delete_edge(e)
        self.last_critical = critical
        rid, le = self.edge_local[e]
        self.counters.inner_calls += 1
        local_report = self.inner[rid].delete(le)

        sk = self.skeleton
        separated = False
        seed_a = seed_b = None
        if local_report:
            verts = self.region_verts[rid]
            moved: dict[int, list[int]] = {}
            old_classes: dict[int, AuxClass] = {}
            for lv, new_lid in local_report:
                gv = verts[lv]
                moved.setdefault(new_lid, []).append(gv)
                old_classes[gv] = sk.membership[gv][rid]
            old = next(iter(old_classes.values()))
            for gv, cls in old_classes.items():
                if cls is not old:
                    raise InvariantError("one deletion moved two local classes")
            ops = 0
            for new_lid, members in moved.items():
                for gv in members:
                    old.members.remove(gv)
                cls = AuxClass((rid, new_lid), set(members))
                sk.classes[(rid, new_lid)] = cls
                for gv in members:
                    sk.membership[gv][rid] = cls
                sk.cc_of[cls] = sk.cc_of[members[0]]
                ops += len(members) + 1
            if not old.members:
                del sk.classes[old.key]
                sk.cc_of.pop(old, None)
            self.counters.skeleton_ops += ops
            groups = list(moved.values())
            if old.members:
                groups.append(list(old.members))
            if len(groups) >= 2:
                separated = True
                seed_a = min(groups[0])
                seed_b = min(groups[1])

        report: list[tuple[int, int]] = []
        if critical and separated:
            if seed_b < seed_a:
                seed_a, seed_b = seed_b, seed_a
            counters = self.counters

            def bump():
                counters.skeleton_ops += 1

            side = smaller_side(seed_a, seed_b, sk.neighbors, bump)
            fresh = self.ids.fresh()
            for node in side:
                sk.cc_of[node] = fresh
            relabeled = len(side)
            self.skeleton_relabels += relabeled
            counters.relabels += relabeled
            if self.skeleton_relabels > self._skeleton_relabel_bound:
                raise InvariantError(
                    f"skeleton relabels {self.skeleton_relabels} exceed bound "
                    f"{self._skeleton_relabel_bound}")
            report = sorted((v, fresh) for v in side
                            if isinstance(v, int) and v in self.explicit)
        self.change_log.append(report)
        return report

    def cc_id(self, v: int) -> int:
        sk = self.skeleton
        if v in sk.membership:
            return sk.cc_of[v]
        lonely = self._lonely.get(v)
        if lonely is not None:
            return lonely
        rid = self.division.regions_of_vertex[v][0]
        lid = self._local_cc(rid, v)
        cls = sk.classes.get((rid, lid))
        if cls is not None:
            return sk.cc_of[next(iter(cls.members))]
        alias = self._alias[rid]
        a = alias.get(lid)
        if a is None:
            a = len(alias)
            alias[lid] = a
        return composite_id(rid, a)

    def query(self, u: int, w: int) -> bool:
        return self.cc_id(u) == self.cc_id(w)


# -- assembly ----------------------------------------------------------------

def micro_factory(sub: PlanarGraph, explicit: set[int], counters: Counters):
    edges = [sub.endpoints(i) for i in range(sub.edge_count)]
    return MicroDc(sub.vertex_count, edges, explicit, counters, shared_table())


def base_factory(sub: PlanarGraph, explicit: set[int], counters: Counters):
    return BaseState(sub, explicit, counters)


def make_level_factory(r_of, inner_factory):
    """Factory of levels whose region parameter is r_of(subgraph size)."""

    def factory(sub: PlanarGraph, explicit: set[int], counters: Counters):
        return LevelState(sub, explicit, r_of(sub.vertex_count),
                          inner_factory, counters)

    return factory


def _full_inner_factory(r1: int):
    r2 = min(level_r(r1), MICRO_CAPACITY)

    def factory(sub: PlanarGraph, explicit: set[int], counters: Counters):
        if sub.vertex_count <= MICRO_THRESHOLD:
            return micro_factory(sub, explicit, counters)
        return LevelState(sub, explicit, r2, micro_factory, counters)

    return factory


def assemble_one_level(g: PlanarGraph, explicit: set[int] | None = None,
                       counters: Counters | None = None,
                       division: r_division.Division | None = None) -> LevelState:
    """Single level over the explicit baseline (the first speedup)."""
    counters = counters if counters is not None else Counters()
    return LevelState(g, explicit or set(), level_r(g.vertex_count),
                      base_factory, counters, division=division)


def assemble_full(g: PlanarGraph, explicit: set[int] | None = None,
                  counters: Counters | None = None,
                  division: r_division.Division | None = None):
    """The two-level stack over micro instances (constant-time queries).

    For graphs at or below the micro threshold the stack degenerates to a
    single micro instance wrapped to the same interface.
    """
    counters = counters if counters is not None else Counters()
    n = g.vertex_count
    if n <= MICRO_THRESHOLD:
        return _MicroWhole(g, explicit or set(), counters)
    r1 = level_r(n)
    return LevelState(g, explicit or set(), r1, _full_inner_factory(r1),
                      counters, division=division)


class _MicroWhole:
    """A micro instance over the whole (tiny) graph, interface-complete."""

    def __init__(self, g: PlanarGraph, explicit: set[int], counters: Counters):
        self.graph = g
        self.counters = counters
        edges = [g.endpoints(e) for e in range(g.edge_count)]
        self._micro = MicroDc(g.vertex_count, edges, explicit, counters,
                              shared_table())
        self.monitor = DualComplement.attach(g, counters)
        self.last_critical = False
        self.change_log: list[list[tuple[int, int]]] = []

    def delete(self, e: int) -> list[tuple[int, int]]:
        critical = self.monitor.on_delete(e)
        self.graph.delete_edge(e)
        self.counters.inner_calls += 1
        report = self._micro.delete(e)
        self.last_critical = critical
        if critical != self._micro.last_critical:
            raise InvariantError("micro and monitor disagree on criticality")
        self.change_log.append(report)
        return report

    def cc_id(self, v: int) -> int:
        self.counters.inner_calls += 1
        return self._micro.cc_id(v)

    def query(self, u: int, w: int) -> bool:
        return self.cc_id(u) == self.cc_id(w)
