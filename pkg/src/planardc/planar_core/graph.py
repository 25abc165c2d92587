"""Embedded planar multigraph stored as a rotation system.

Edge i owns half-edges 2i and 2i+1; twin(h) is h ^ 1.  Half-edge 2i points
from endpoints[i][0] to endpoints[i][1].  rotation_next[h] is the next
half-edge counterclockwise around tail(h); together with the twin
involution this encodes the embedding combinatorially.  Deleting an edge
splices its two half-edges out of their rotation cycles, so traversals
only ever see alive edges.
"""

from ..errors import StructureError

NO_EDGE = -1


class PlanarGraph:
    __slots__ = ("vertex_count", "head", "rotation_next", "rotation_prev",
                 "alive", "deletable", "edge_count_alive", "first_out")

    def __init__(self, vertex_count: int):
        self.vertex_count = vertex_count
        self.head: list[int] = []            # per half-edge
        self.rotation_next: list[int] = []   # per half-edge, alive cycle
        self.rotation_prev: list[int] = []
        self.alive: list[bool] = []          # per edge
        self.deletable: list[bool] = []      # per edge
        self.edge_count_alive = 0
        self.first_out = [NO_EDGE] * vertex_count  # any alive half-edge per tail

    # -- construction ----------------------------------------------------

    @classmethod
    def from_rotations(cls, n: int, edges: list[tuple[int, int]],
                       rotations: list[list[int]]) -> "PlanarGraph":
        """Build from an edge list plus per-vertex rotation lists of edge ids.

        rotations[v] lists v's incident edge ids in counterclockwise order.
        Inputs must be simple: self-loops and parallel edges are rejected.
        """
        g = cls(n)
        seen = set()
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise StructureError(f"edge {i} endpoint out of range: ({u}, {v})")
            if u == v:
                raise StructureError(f"edge {i} is a self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise StructureError(f"parallel edge {i} between {key[0]} and {key[1]}")
            seen.add(key)
            g._append_edge(u, v)
        g._install_rotations(edges, rotations)
        g.edge_count_alive = len(edges)
        return g

    def _append_edge(self, u: int, v: int) -> int:
        e = len(self.alive)
        self.head.extend((v, u))
        self.rotation_next.extend((NO_EDGE, NO_EDGE))
        self.rotation_prev.extend((NO_EDGE, NO_EDGE))
        self.alive.append(True)
        self.deletable.append(True)
        return e

    def _install_rotations(self, edges, rotations) -> None:
        if len(rotations) != self.vertex_count:
            raise StructureError("need one rotation list per vertex")
        placed = [False] * len(self.head)
        for v, order in enumerate(rotations):
            hs = []
            for e in order:
                if not (0 <= e < len(self.alive)):
                    raise StructureError(f"vertex {v} lists unknown edge {e}")
                u0, v0 = edges[e]
                if v == u0:
                    h = 2 * e
                elif v == v0:
                    h = 2 * e + 1
                else:
                    raise StructureError(f"vertex {v} lists non-incident edge {e}")
                if placed[h]:
                    raise StructureError(f"half-edge of edge {e} placed twice at vertex {v}")
                placed[h] = True
                hs.append(h)
            for i, h in enumerate(hs):
                nxt = hs[(i + 1) % len(hs)]
                self.rotation_next[h] = nxt
                self.rotation_prev[nxt] = h
            self.first_out[v] = hs[0] if hs else NO_EDGE
        if not all(placed):
            missing = placed.index(False)
            raise StructureError(
                f"edge {missing // 2} missing from the rotation of vertex "
                f"{self.tail(missing)}")

    # -- basic accessors -------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.alive)

    def twin(self, h: int) -> int:
        return h ^ 1

    def tail(self, h: int) -> int:
        return self.head[h ^ 1]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.head[2 * e + 1], self.head[2 * e]

    def is_alive(self, e: int) -> bool:
        return self.alive[e]

    def face_next(self, h: int) -> int:
        """Next half-edge along the face walk (rotation_next of the twin)."""
        return self.rotation_next[h ^ 1]

    def out_half_edges(self, v: int):
        """Alive half-edges with tail v, in counterclockwise order."""
        h0 = self.first_out[v]
        if h0 == NO_EDGE:
            return
        h = h0
        while True:
            yield h
            h = self.rotation_next[h]
            if h == h0:
                break

    def neighbors(self, v: int):
        for h in self.out_half_edges(v):
            yield self.head[h]

    def degree(self, v: int) -> int:
        return sum(1 for _ in self.out_half_edges(v))

    def alive_edges(self):
        return (e for e in range(len(self.alive)) if self.alive[e])

    # -- mutation ----------------------------------------------------------

    def delete_edge(self, e: int) -> None:
        if not (0 <= e < len(self.alive)):
            raise ValueError(f"edge {e} does not exist")
        if not self.alive[e]:
            raise ValueError(f"edge {e} is already deleted")
        if not self.deletable[e]:
            raise ValueError(f"edge {e} is an expansion edge and cannot be deleted")
        for h in (2 * e, 2 * e + 1):
            self._splice_out(h)
        self.alive[e] = False
        self.edge_count_alive -= 1

    def _splice_out(self, h: int) -> None:
        t = self.head[h ^ 1]
        nxt = self.rotation_next[h]
        if nxt == h:
            self.first_out[t] = NO_EDGE
        else:
            prv = self.rotation_prev[h]
            self.rotation_next[prv] = nxt
            self.rotation_prev[nxt] = prv
            if self.first_out[t] == h:
                self.first_out[t] = nxt

    def insert_half_edge_after(self, h_ref: int, h_new: int) -> None:
        """Splice h_new into the rotation cycle right after h_ref (same tail)."""
        nxt = self.rotation_next[h_ref]
        self.rotation_next[h_ref] = h_new
        self.rotation_prev[h_new] = h_ref
        self.rotation_next[h_new] = nxt
        self.rotation_prev[nxt] = h_new

    def add_edge_isolated(self, u: int, v: int) -> int:
        """Add an edge whose half-edges form singleton rotation cycles.

        Only valid while u and v have no other alive edges (used by builders);
        general insertion goes through the corner-splice helpers in surgery.
        """
        e = self._append_edge(u, v)
        for h, t in ((2 * e, u), (2 * e + 1, v)):
            self.rotation_next[h] = h
            self.rotation_prev[h] = h
            self.first_out[t] = h
        self.edge_count_alive += 1
        return e

    # -- whole-graph helpers ---------------------------------------------

    def clone(self) -> "PlanarGraph":
        g = PlanarGraph(self.vertex_count)
        g.head = self.head[:]
        g.rotation_next = self.rotation_next[:]
        g.rotation_prev = self.rotation_prev[:]
        g.alive = self.alive[:]
        g.deletable = self.deletable[:]
        g.edge_count_alive = self.edge_count_alive
        g.first_out = self.first_out[:]
        return g

    def component_labels(self) -> list[int]:
        """Connected-component label per vertex, by plain graph search."""
        label = [-1] * self.vertex_count
        nxt = 0
        head = self.head
        rot = self.rotation_next
        first = self.first_out
        for s in range(self.vertex_count):
            if label[s] != -1:
                continue
            label[s] = nxt
            stack = [s]
            while stack:
                v = stack.pop()
                h0 = first[v]
                if h0 == NO_EDGE:
                    continue
                h = h0
                while True:
                    w = head[h]
                    if label[w] == -1:
                        label[w] = nxt
                        stack.append(w)
                    h = rot[h]
                    if h == h0:
                        break
            nxt += 1
        return label

    def component_count(self) -> int:
        labels = self.component_labels()
        return max(labels) + 1 if labels else 0

    def validate(self) -> None:
        """Check the full representation; raises StructureError on any defect."""
        n_half = len(self.head)
        if n_half != 2 * len(self.alive):
            raise StructureError("half-edge array length mismatch")
        if self.edge_count_alive != sum(self.alive):
            raise StructureError("alive edge count drifted")
        seen = [False] * n_half
        for v in range(self.vertex_count):
            h0 = self.first_out[v]
            if h0 == NO_EDGE:
                continue
            h = h0
            for _ in range(n_half + 1):
                if not self.alive[h // 2]:
                    raise StructureError(f"dead half-edge {h} reachable in rotation of {v}")
                if self.tail(h) != v:
                    raise StructureError(f"half-edge {h} in rotation of {v} has tail {self.tail(h)}")
                if seen[h]:
                    raise StructureError(f"half-edge {h} appears in two rotations")
                seen[h] = True
                if self.rotation_prev[self.rotation_next[h]] != h:
                    raise StructureError(f"rotation prev/next disagree at half-edge {h}")
                h = self.rotation_next[h]
                if h == h0:
                    break
            else:
                raise StructureError(f"rotation cycle of vertex {v} does not close")
        for e in range(len(self.alive)):
            if self.alive[e] and not (seen[2 * e] and seen[2 * e + 1]):
                raise StructureError(f"alive edge {e} missing from rotations")
