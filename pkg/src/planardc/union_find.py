"""Disjoint-set structure with union by rank and path compression.

The bridge monitor only relies on the UnionFind interface below, so a
specialized implementation (e.g. one exploiting that the allowed unions
form a planar graph fixed up front) can be slotted in without touching
callers.  The classical structure shipped here is within an
inverse-Ackermann factor of that, which is invisible at any testable
scale; the partition behaviour is identical.
"""

from typing import Protocol


class UnionFind(Protocol):
    def find(self, a: int) -> int: ...
    def union(self, a: int, b: int) -> bool: ...

    @property
    def component_count(self) -> int: ...


class Dsu:
    """Union by rank + path halving over elements 0..n-1."""

    __slots__ = ("parent", "rank", "_components", "op_counter")

    def __init__(self, n: int):
        if n < 0:
            raise ValueError(f"element count must be >= 0, got {n}")
        self.parent = list(range(n))
        self.rank = [0] * n
        self._components = n
        self.op_counter = 0

    def __len__(self) -> int:
        return len(self.parent)

    @property
    def component_count(self) -> int:
        return self._components

    def find(self, a: int) -> int:
        parent = self.parent
        if a < 0 or a >= len(parent):
            raise ValueError(f"element {a} out of range 0..{len(parent) - 1}")
        self.op_counter += 1
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        """Merge the sets holding a and b; True iff they were distinct."""
        ra, rb = self.find(a), self.find(b)
        self.op_counter += 1
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self._components -= 1
        return True

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)
