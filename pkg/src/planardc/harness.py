"""Operational surface: traces, oracles, algorithm adapters, fuzzing and
benchmark runs with counter reports.

Two independent ground truths are provided.  oracle_run recomputes
connectivity by plain graph search after every mutation; offline_oracle
replays the trace backwards over a union-find, turning deletions into
insertions.  They are cross-checked against each other in the test suite,
and every algorithm's answers and per-deletion criticality verdicts are
compared against them position by position.
"""

import time
from dataclasses import dataclass, field

from .counters import CounterReport, Counters
from .dc_base import BaseState
from .planar_core import PlanarGraph, generate, parse_graph, reduce_degree
from .planar_core.reduce import VertexMap
from .rand import seeded_rng
from .skeleton_level import assemble_full, assemble_one_level
from .union_find import Dsu
from . import r_division

ALGORITHMS = ("base", "one_level", "full")


# ---------------------------------------------------------------------------
# traces
# ---------------------------------------------------------------------------

@dataclass
class DeletionTrace:
    """Ordered D/Q operations, optionally with expected query answers."""

    ops: list[tuple]                      # ("D", e) | ("Q", u, w)
    expected: list[int] | None = None     # one 0/1 per Q op, in order

    def validate(self, g: PlanarGraph) -> None:
        alive = list(g.alive)
        n = g.vertex_count
        queries = 0
        for i, op in enumerate(self.ops):
            if op[0] == "D":
                e = op[1]
                if not (0 <= e < len(alive)) or not alive[e]:
                    raise ValueError(f"op {i}: edge {e} not alive at this position")
                alive[e] = False
            else:
                _, u, w = op
                if not (0 <= u < n and 0 <= w < n):
                    raise ValueError(f"op {i}: query endpoint out of range")
                queries += 1
        if self.expected is not None and len(self.expected) != queries:
            raise ValueError(
                f"{len(self.expected)} expected answers for {queries} queries")

    @property
    def deletions(self) -> int:
        return sum(1 for op in self.ops if op[0] == "D")


def random_trace(g: PlanarGraph, seed: int, query_rate: float = 0.3,
                 delete_fraction: float = 1.0) -> DeletionTrace:
    """Random deletion order over the deletable edges, queries interleaved."""
    rng = seeded_rng(seed, "harness.trace")
    edges = [e for e in range(g.edge_count) if g.alive[e] and g.deletable[e]]
    rng.shuffle(edges)
    edges = edges[: max(1, int(len(edges) * delete_fraction))] if edges else []
    n = g.vertex_count
    ops: list[tuple] = []
    for e in edges:
        ops.append(("D", e))
        while rng.random() < query_rate:
            ops.append(("Q", rng.randrange(n), rng.randrange(n)))
    return DeletionTrace(ops=ops)


def write_trace(trace: DeletionTrace, g: PlanarGraph | None = None) -> str:
    """Serialize a trace; with g, the graph block is embedded first."""
    from .planar_core import format_graph

    out = []
    if g is not None:
        out.append(format_graph(g).rstrip("\n"))
    for op in trace.ops:
        if op[0] == "D":
            out.append(f"D {op[1]}")
        else:
            out.append(f"Q {op[1]} {op[2]}")
    if trace.expected is not None:
        out.extend(f"A {a}" for a in trace.expected)
    return "\n".join(out) + "\n"


def read_trace(text: str):
    """Parse a trace; returns (graph or None, DeletionTrace)."""
    lines = text.splitlines()
    first_op = 0
    graph = None
    if lines and lines[0].split() and lines[0].split()[0] not in ("D", "Q", "A"):
        n, m = map(int, lines[0].split())
        block = 1 + m + n
        graph = parse_graph("\n".join(lines[:block]) + "\n")
        first_op = block
    ops: list[tuple] = []
    expected: list[int] = []
    for line in lines[first_op:]:
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "D":
            ops.append(("D", int(parts[1])))
        elif parts[0] == "Q":
            ops.append(("Q", int(parts[1]), int(parts[2])))
        elif parts[0] == "A":
            expected.append(int(parts[1]))
        else:
            raise ValueError(f"bad trace line {line!r}")
    return graph, DeletionTrace(ops=ops, expected=expected or None)


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def oracle_run(g: PlanarGraph, trace: DeletionTrace):
    """Ground truth by full graph search after every mutation.

    Returns (answers, criticals).  Cost is a search per operation; use the
    offline oracle for large fuzzing campaigns.
    """
    trace.validate(g)
    work = g.clone()
    answers: list[int] = []
    criticals: list[bool] = []
    components = work.component_count()
    for op in trace.ops:
        if op[0] == "D":
            work.delete_edge(op[1])
            now = work.component_count()
            criticals.append(now > components)
            components = now
        else:
            labels = work.component_labels()
            answers.append(1 if labels[op[1]] == labels[op[2]] else 0)
    return answers, criticals


def offline_oracle(g: PlanarGraph, trace: DeletionTrace):
    """Ground truth by processing the trace backwards over a union-find."""
    trace.validate(g)
    n = g.vertex_count
    alive = list(g.alive)
    for op in trace.ops:
        if op[0] == "D":
            alive[op[1]] = False
    dsu = Dsu(n)
    for e in range(g.edge_count):
        if alive[e]:
            u, w = g.endpoints(e)
            dsu.union(u, w)
    answers_rev: list[int] = []
    criticals_rev: list[bool] = []
    for op in reversed(trace.ops):
        if op[0] == "D":
            u, w = g.endpoints(op[1])
            criticals_rev.append(dsu.union(u, w))
        else:
            answers_rev.append(1 if dsu.find(op[1]) == dsu.find(op[2]) else 0)
    return answers_rev[::-1], criticals_rev[::-1]


# ---------------------------------------------------------------------------
# algorithm adapters
# ---------------------------------------------------------------------------

class Algorithm:
    """Uniform run surface over base / one_level / full.

    Owns a private copy of the input graph (degree-reduced for the level
    algorithms, with queries translated through the vertex map) and records
    the criticality verdict of every deletion.
    """

    def __init__(self, name: str, g: PlanarGraph,
                 counters: Counters | None = None,
                 division: r_division.Division | None = None):
        if name not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {name!r}; expected {ALGORITHMS}")
        self.name = name
        self.counters = counters if counters is not None else Counters()
        self.criticals: list[bool] = []
        self.max_query_inner_calls = 0
        if name == "base":
            self.impl = BaseState(g.clone(), counters=self.counters)
            self.vmap = VertexMap.identity(g.vertex_count)
        else:
            reduced, vmap = reduce_degree(g)
            self.vmap = vmap
            if name == "one_level":
                self.impl = assemble_one_level(reduced, counters=self.counters,
                                               division=division)
            else:
                self.impl = assemble_full(reduced, counters=self.counters,
                                          division=division)

    def delete(self, e: int) -> None:
        self.impl.delete(e)
        self.criticals.append(self.impl.last_critical)

    def query(self, u: int, w: int) -> bool:
        before = self.counters.inner_calls
        out = self.impl.query(self.vmap.primary(u), self.vmap.primary(w))
        calls = self.counters.inner_calls - before
        if calls > self.max_query_inner_calls:
            self.max_query_inner_calls = calls
        return out

    def cc_id(self, v: int) -> int:
        return self.impl.cc_id(self.vmap.primary(v))


def run(algorithm: str, g: PlanarGraph, trace: DeletionTrace, seed: int = 0,
        division: r_division.Division | None = None):
    """Replay a trace; returns (answers, criticals, CounterReport).

    Counters cover only the decremental phase: construction (division,
    skeleton, table warmup) happens before the clock and the counter reset.
    """
    trace.validate(g)
    algo = Algorithm(algorithm, g, division=division)
    counters = algo.counters
    for name in vars(counters):
        setattr(counters, name, 0)
    answers: list[int] = []
    t0 = time.perf_counter_ns()
    for op in trace.ops:
        if op[0] == "D":
            algo.delete(op[1])
        else:
            answers.append(1 if algo.query(op[1], op[2]) else 0)
    wall = time.perf_counter_ns() - t0
    report = CounterReport.from_counters(
        algorithm, g.vertex_count, g.edge_count_alive, seed, counters, wall)
    return answers, algo.criticals, report


# ---------------------------------------------------------------------------
# fuzzing
# ---------------------------------------------------------------------------

@dataclass
class FuzzResult:
    ok: bool
    seed: int
    kind: str
    n: int
    algorithm: str
    mismatch_op: int | None = None
    minimized: DeletionTrace | None = None
    graph: PlanarGraph | None = None

    def describe(self) -> str:
        if self.ok:
            return f"seed {self.seed}: ok"
        return (f"seed {self.seed}: MISMATCH algo={self.algorithm} "
                f"kind={self.kind} n={self.n} at op {self.mismatch_op}; "
                f"minimized to {len(self.minimized.ops)} ops")


def _first_mismatch(g, trace, algorithm):
    """Index of the first op whose answer or verdict disagrees with oracle."""
    exp_answers, exp_criticals = offline_oracle(g, trace)
    answers, criticals, _ = run(algorithm, g, trace)
    qi = di = 0
    for i, op in enumerate(trace.ops):
        if op[0] == "D":
            if criticals[di] != exp_criticals[di]:
                return i
            di += 1
        else:
            if answers[qi] != exp_answers[qi]:
                return i
            qi += 1
    return None


def snap_size(kind: str, n: int) -> int:
    """Round n to the nearest size the generator accepts."""
    import math
    if kind == "grid":
        return max(1, math.isqrt(n)) ** 2
    if kind in ("cycle", "stacked_triangulation"):
        return max(3, n)
    return max(1, n)


def fuzz(seed: int, n: int, kind: str = "stacked_triangulation",
         algorithm: str = "full") -> FuzzResult:
    """One randomized cross-check run; minimizes on mismatch."""
    n = snap_size(kind, n)
    g = generate(kind, n, seed)
    trace = random_trace(g, seed)
    at = _first_mismatch(g, trace, algorithm)
    if at is None:
        return FuzzResult(ok=True, seed=seed, kind=kind, n=n, algorithm=algorithm)
    minimized = _minimize(g, trace, algorithm, at)
    return FuzzResult(ok=False, seed=seed, kind=kind, n=n, algorithm=algorithm,
                      mismatch_op=at, minimized=minimized, graph=g)


def _minimize(g, trace, algorithm, at):
    """Greedy prefix minimization: truncate at the mismatch, then drop
    earlier deletions one at a time while the failure reproduces."""
    ops = trace.ops[: at + 1]
    i = 0
    while i < len(ops) - 1:
        if ops[i][0] != "D":
            i += 1
            continue
        candidate = DeletionTrace(ops=ops[:i] + ops[i + 1:])
        if _first_mismatch(g, candidate, algorithm) == len(candidate.ops) - 1:
            ops = candidate.ops
        else:
            i += 1
    return DeletionTrace(ops=ops)


# ---------------------------------------------------------------------------
# benchmarking
# ---------------------------------------------------------------------------

def bench_sizes(spec: str) -> list[int]:
    """Parse a size range like '2^10..2^17' or a comma list."""
    def one(tok: str) -> int:
        tok = tok.strip()
        if "^" in tok:
            b, e = tok.split("^")
            return int(b) ** int(e)
        return int(tok)

    if ".." in spec:
        lo, hi = spec.split("..")
        lo_v, hi_v = one(lo), one(hi)
        sizes = []
        v = lo_v
        while v <= hi_v:
            sizes.append(v)
            v *= 2
        return sizes
    return [one(tok) for tok in spec.split(",")]


def bench(algorithm: str, sizes: list[int], kind: str = "stacked_triangulation",
          seed: int = 0, query_rate: float = 0.05,
          division_cache: dict | None = None) -> list[CounterReport]:
    """Full-deletion runs across sizes; returns one counter report per size."""
    reports = []
    for n in sizes:
        n = snap_size(kind, n)
        g = generate(kind, n, seed)
        trace = random_trace(g, seed, query_rate=query_rate)
        division = None
        if division_cache is not None and algorithm in ("one_level", "full"):
            key = (kind, n, seed)
            division = division_cache.get(key)
            if division is None:
                reduced, _ = reduce_degree(g)
                from .skeleton_level import level_r
                division = r_division.build(reduced, level_r(reduced.vertex_count))
                division_cache[key] = division
        _, _, report = run(algorithm, g, trace, seed=seed, division=division)
        reports.append(report)
    return reports
