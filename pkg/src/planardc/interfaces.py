"""The inner-algorithm abstraction the level combinator composes over.

Any decremental connectivity implementation that (1) reports, after each
deletion, exactly the explicit-set vertices whose cc-identifier changed
and (2) returns the cc-identifier of any vertex on demand can serve as the
per-region algorithm of a level.  The baseline, a level itself, and the
tiny-graph instances all satisfy this, which is what lets towers of any
height be assembled.
"""

from typing import Protocol, runtime_checkable

from .counters import Counters
from .planar_core import PlanarGraph


@runtime_checkable
class DecrementalConnectivity(Protocol):
    def delete(self, edge_id: int) -> list[tuple[int, int]]:
        """Remove an edge; returns (vertex, new id) for changed explicit ids."""
        ...

    def cc_id(self, v: int) -> int: ...

    def query(self, u: int, w: int) -> bool: ...


class InnerFactory(Protocol):
    def __call__(self, sub: PlanarGraph, explicit: set[int],
                 counters: Counters) -> DecrementalConnectivity: ...
