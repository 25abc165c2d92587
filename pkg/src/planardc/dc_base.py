"""Baseline decremental connectivity: explicit cc-identifiers with
smaller-half relabeling.

Every vertex's identifier is held in a table, so queries are reads.  A
critical deletion (reported by the attached bridge monitor) splits a
component; two lockstep searches from the deleted edge's endpoints find
the smaller side, which alone receives a fresh identifier.  A vertex is
therefore relabeled only when its component at least halves, giving the
n * (floor(log2 n) + 1) total relabel bound that is asserted on every run.

The explicit set generalizes the structure for use inside a region: the
delete report lists exactly the explicit vertices whose identifier
changed, which is all a parent level needs to maintain its skeleton.
"""

import math

from .bridge_monitor import DualComplement
from .cc_ids import IdAllocator
from .counters import Counters
from .errors import InvariantError
from .lockstep import smaller_side
from .planar_core import PlanarGraph


class BaseState:
    """Lemma-2 style instance bound to one graph (single writer)."""

    def __init__(self, g: PlanarGraph, explicit: set[int] | None = None,
                 counters: Counters | None = None):
        self.graph = g
        self.counters = counters if counters is not None else Counters()
        self.monitor = DualComplement.attach(g, self.counters)
        self.explicit = frozenset(explicit or ())
        self.ids = IdAllocator()
        self.cc_of = [0] * g.vertex_count
        self.relabel_counter = 0
        self.change_log: list[list[tuple[int, int]]] = []
        self._relabel_bound = g.vertex_count * (max(g.vertex_count, 1).bit_length())
        labels = g.component_labels()
        by_label: dict[int, int] = {}
        for v in range(g.vertex_count):
            lab = labels[v]
            if lab not in by_label:
                by_label[lab] = self.ids.fresh()
            self.cc_of[v] = by_label[lab]
        self.last_critical = False

    def delete(self, e: int) -> list[tuple[int, int]]:
        """Delete edge e; returns the explicit vertices that were relabeled."""
        g = self.graph
        u, w = g.endpoints(e)
        critical = self.monitor.on_delete(e)
        g.delete_edge(e)
        self.last_critical = critical
        report: list[tuple[int, int]] = []
        if critical:
            if w < u:
                u, w = w, u  # tie rule: the first endpoint's side wins ties
            counters = self.counters
            head = g.head

            def neighbors(v, _head=head, _out=g.out_half_edges):
                for h in _out(v):
                    yield _head[h]

            def bump(_c=counters):
                _c.dfs_steps += 1

            side = smaller_side(u, w, neighbors, bump)
            fresh = self.ids.fresh()
            cc_of = self.cc_of
            for v in side:
                cc_of[v] = fresh
            self.relabel_counter += len(side)
            counters.relabels += len(side)
            if self.relabel_counter > self._relabel_bound:
                raise InvariantError(
                    f"relabel counter {self.relabel_counter} exceeds bound "
                    f"{self._relabel_bound}")
            report = sorted((v, fresh) for v in side if v in self.explicit)
        self.change_log.append(report)
        return report

    def cc_id(self, v: int) -> int:
        return self.cc_of[v]

    def query(self, u: int, w: int) -> bool:
        return self.cc_of[u] == self.cc_of[w]
