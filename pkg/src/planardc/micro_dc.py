"""Table-driven decremental connectivity for tiny graphs.

A graph on t <= 64 vertices is a bitmask over its t(t-1)/2 vertex pairs
(lexicographic (min, max) order), so deleting an edge clears one bit and
the resulting state's component structure can be cached.  A process-wide
memo table keyed by (t, edge_mask) holds the canonical partition of every
visited state and, per (state, deleted bit), the transition: new mask,
criticality flag and the smaller side's vertex bitset.  Eager warmup
enumerates every state for very small t; everything else fills in lazily
on first visit, and lazily computed entries are bit-identical to eager
ones.  States repeat across the many region instances of a full build,
which is what makes the table pay for itself.

Identifiers follow the same smaller-half discipline as the explicit
baseline: only the smaller side of a split is restamped (with the side's
minimum vertex and a fresh epoch), so the change-report volume per
instance stays within |V_e| * (floor(log2 t) + 1).
"""

from .counters import Counters
from .errors import InvariantError

CAPACITY = 64
_EAGER_LIMIT = 6


def pair_index(t: int, i: int, j: int) -> int:
    """Bit index of vertex pair (i, j) in lexicographic (min, max) order."""
    if i == j:
        raise ValueError("self-loops have no pair index")
    if i > j:
        i, j = j, i
    return i * t - i * (i + 1) // 2 + (j - i - 1)


def pair_of_index(t: int, idx: int) -> tuple[int, int]:
    i = 0
    row = t - 1
    while idx >= row:
        idx -= row
        row -= 1
        i += 1
    return i, i + 1 + idx


def _partition_of_mask(t: int, mask: int) -> tuple[int, ...]:
    """Canonical labeling: each vertex mapped to its component's minimum."""
    rep = list(range(t))

    def find(a):
        while rep[a] != a:
            rep[a] = rep[rep[a]]
            a = rep[a]
        return a

    idx = 0
    for i in range(t):
        for j in range(i + 1, t):
            if (mask >> idx) & 1:
                ra, rb = find(i), find(j)
                if ra != rb:
                    if ra < rb:
                        rep[rb] = ra
                    else:
                        rep[ra] = rb
            idx += 1
    return tuple(find(v) for v in range(t))


class TransitionTable:
    """Shared memo of per-state partitions and per-deletion transitions."""

    def __init__(self):
        self._partitions: dict[tuple[int, int], tuple[int, ...]] = {}
        self._transitions: dict[tuple[int, int, int], tuple[int, bool, int]] = {}

    def stats(self) -> tuple[int, int]:
        return len(self._partitions), len(self._transitions)

    def partition(self, t: int, mask: int, counters: Counters | None = None) -> tuple[int, ...]:
        key = (t, mask)
        part = self._partitions.get(key)
        if part is None:
            part = _partition_of_mask(t, mask)
            self._partitions.setdefault(key, part)
            if counters is not None:
                counters.micro_misses += 1
        elif counters is not None:
            counters.micro_hits += 1
        return part

    def transition(self, t: int, mask: int, bit: int,
                   counters: Counters | None = None) -> tuple[int, bool, int]:
        """(new_mask, critical, smaller_side_bitset) for clearing one bit.

        The smaller side is measured within the split component; on equal
        sizes the side holding the smaller vertex index is chosen.
        """
        key = (t, mask, bit)
        entry = self._transitions.get(key)
        if entry is not None:
            if counters is not None:
                counters.micro_hits += 1
            return entry
        if counters is not None:
            counters.micro_misses += 1
        if not (mask >> bit) & 1:
            raise ValueError(f"bit {bit} not set in mask {mask:#x}")
        new_mask = mask & ~(1 << bit)
        old_part = self.partition(t, mask)
        new_part = self.partition(t, new_mask)
        u, w = pair_of_index(t, bit)
        critical = new_part[u] != new_part[w] and old_part[u] == old_part[w]
        smaller = 0
        if critical:
            side_u = [v for v in range(t) if new_part[v] == new_part[u]]
            side_w = [v for v in range(t) if new_part[v] == new_part[w]]
            if (len(side_u), min(side_u)) <= (len(side_w), min(side_w)):
                side = side_u
            else:
                side = side_w
            for v in side:
                smaller |= 1 << v
        entry = (new_mask, critical, smaller)
        self._transitions.setdefault(key, entry)
        return entry


_SHARED = TransitionTable()


def shared_table() -> TransitionTable:
    return _SHARED


def table_warmup(t_eager: int = 5, table: TransitionTable | None = None) -> TransitionTable:
    """Eagerly fill the table for every graph on up to t_eager vertices.

    Rejects t_eager > 6: the state count 2^(t(t-1)/2) gets out of hand.
    """
    if t_eager > _EAGER_LIMIT:
        raise ValueError(f"t_eager={t_eager} exceeds the eager limit {_EAGER_LIMIT}")
    table = table if table is not None else _SHARED
    for t in range(1, t_eager + 1):
        bits = t * (t - 1) // 2
        for mask in range(1 << bits):
            table.partition(t, mask)
            m = mask
            while m:
                low = m & -m
                table.transition(t, mask, low.bit_length() - 1)
                m ^= low
    return table


class MicroDc:
    """One tiny-graph instance over an edge-list, backed by the shared table.

    Edge ids are positions in the constructor's edge list, so it plugs in
    as the per-region algorithm: delete(edge_id) reports explicit-set
    changes, cc_id(v) reads in O(1).
    """

    def __init__(self, t: int, edge_list: list[tuple[int, int]],
                 explicit: set[int] | None = None,
                 counters: Counters | None = None,
                 table: TransitionTable | None = None):
        if t > CAPACITY:
            raise ValueError(f"micro instance capacity is {CAPACITY}, got t={t}")
        self.t = t
        self.counters = counters if counters is not None else Counters()
        self.table = table if table is not None else _SHARED
        self.explicit_mask = 0
        for v in explicit or ():
            self.explicit_mask |= 1 << v
        self.edge_bits = []
        mask = 0
        for u, w in edge_list:
            bit = pair_index(t, u, w)
            if (mask >> bit) & 1:
                raise ValueError(f"duplicate edge ({u}, {w})")
            mask |= 1 << bit
            self.edge_bits.append(bit)
        self.edge_mask = mask
        self.epoch = 0
        part = self.table.partition(t, mask, self.counters)
        self.rep = list(part)
        self.rep_epoch = [0] * t
        self.last_critical = False
        self.report_volume = 0

    def delete(self, edge_id: int) -> list[tuple[int, int]]:
        bit = self.edge_bits[edge_id]
        if not (self.edge_mask >> bit) & 1:
            raise ValueError(f"edge {edge_id} already deleted")
        new_mask, critical, smaller = self.table.transition(
            self.t, self.edge_mask, bit, self.counters)
        self.edge_mask = new_mask
        self.last_critical = critical
        report: list[tuple[int, int]] = []
        if critical:
            self.epoch += 1
            side = smaller
            new_rep = _lowest_bit_index(side)
            v = side
            while v:
                low = v & -v
                vid = low.bit_length() - 1
                self.rep[vid] = new_rep
                self.rep_epoch[vid] = self.epoch
                v ^= low
            self.counters.relabels += bin(side).count("1")
            changed = side & self.explicit_mask
            while changed:
                low = changed & -changed
                vid = low.bit_length() - 1
                report.append((vid, self.cc_id(vid)))
                changed ^= low
            self.report_volume += len(report)
        return report

    def cc_id(self, v: int) -> int:
        return (self.rep_epoch[v] << 6) | self.rep[v]

    def query(self, u: int, w: int) -> bool:
        return self.cc_id(u) == self.cc_id(w)


def _lowest_bit_index(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def format_vector_line(t, mask, bit, new_mask, critical, smaller) -> str:
    return (f"{t} {mask:x} {bit} -> {new_mask:x} {int(critical)} {smaller:x}")


def parse_vector_line(line: str):
    left, right = line.split("->")
    t_s, mask_s, bit_s = left.split()
    new_s, crit_s, small_s = right.split()
    return (int(t_s), int(mask_s, 16), int(bit_s),
            int(new_s, 16), bool(int(crit_s)), int(small_s, 16))
