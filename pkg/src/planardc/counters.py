"""Monotone work counters threaded through every algorithm instance.

One Counters object is shared by an algorithm and all of its nested
instances (per-region algorithms, micro tables, skeleton machinery), so a
single run reports totals across the whole stack.
"""

from dataclasses import dataclass, field


@dataclass
class Counters:
    dfs_steps: int = 0        # half-edge examinations inside lockstep searches
    relabels: int = 0         # cc-identifier assignments caused by splits
    dsu_ops: int = 0          # union-find find/union calls (all monitors)
    skeleton_ops: int = 0     # skeleton surgeries plus skeleton search steps
    micro_hits: int = 0       # memo-table lookups that found an entry
    micro_misses: int = 0     # memo-table lookups that computed an entry
    inner_calls: int = 0      # calls crossing the inner-algorithm interface

    def snapshot(self) -> dict:
        return dict(self.__dict__)

    def work(self) -> int:
        """Combined work counter used by the scaling benchmarks."""
        return (self.dfs_steps + self.relabels + self.skeleton_ops
                + self.micro_hits + self.micro_misses)


@dataclass
class CounterReport:
    """One benchmark row: run identity plus final counter values."""

    algo: str
    n: int
    m: int
    seed: int
    dfs_steps: int
    relabels: int
    dsu_ops: int
    skeleton_ops: int
    micro_hits: int
    micro_misses: int
    wall_ns: int

    CSV_HEADER = "algo,n,m,seed,dfs_steps,relabels,dsu_ops,skeleton_ops,micro_hits,micro_misses,wall_ns"

    @classmethod
    def from_counters(cls, algo: str, n: int, m: int, seed: int,
                      counters: Counters, wall_ns: int) -> "CounterReport":
        return cls(algo=algo, n=n, m=m, seed=seed,
                   dfs_steps=counters.dfs_steps,
                   relabels=counters.relabels,
                   dsu_ops=counters.dsu_ops,
                   skeleton_ops=counters.skeleton_ops,
                   micro_hits=counters.micro_hits,
                   micro_misses=counters.micro_misses,
                   wall_ns=wall_ns)

    def csv_row(self) -> str:
        return (f"{self.algo},{self.n},{self.m},{self.seed},{self.dfs_steps},"
                f"{self.relabels},{self.dsu_ops},{self.skeleton_ops},"
                f"{self.micro_hits},{self.micro_misses},{self.wall_ns}")

    def work(self) -> int:
        return (self.dfs_steps + self.relabels + self.skeleton_ops
                + self.micro_hits + self.micro_misses)
