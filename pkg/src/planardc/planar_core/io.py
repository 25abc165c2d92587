"""Text format for embedded graphs.

Line 1: `n m`.  Then m lines `u v` (0-based; the edge id is the line
order).  Then n lines, one per vertex, listing the vertex's incident edge
ids in counterclockwise rotation order (an isolated vertex gets an empty
line).  Parsing is strict: inconsistent rotations are rejected.
"""

from ..errors import StructureError
from .graph import PlanarGraph


def parse_graph(text: str) -> PlanarGraph:
    lines = text.splitlines()
    if not lines:
        raise StructureError("empty graph file")
    header = lines[0].split()
    if len(header) != 2:
        raise StructureError(f"bad header line {lines[0]!r}; expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise StructureError(f"bad header line {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise StructureError("negative counts in header")
    if len(lines) < 1 + m + n:
        raise StructureError(
            f"expected {1 + m + n} lines for n={n}, m={m}, got {len(lines)}")
    edges = []
    for i in range(m):
        parts = lines[1 + i].split()
        if len(parts) != 2:
            raise StructureError(f"bad edge line {lines[1 + i]!r}")
        edges.append((int(parts[0]), int(parts[1])))
    rotations = []
    for v in range(n):
        rotations.append([int(tok) for tok in lines[1 + m + v].split()])
    return PlanarGraph.from_rotations(n, edges, rotations)


def format_graph(g: PlanarGraph) -> str:
    """Serialize g's alive subgraph; edge ids are compacted to 0..m-1."""
    alive = [e for e in range(g.edge_count) if g.alive[e]]
    new_id = {e: i for i, e in enumerate(alive)}
    out = [f"{g.vertex_count} {len(alive)}"]
    for e in alive:
        u, v = g.endpoints(e)
        out.append(f"{u} {v}")
    for v in range(g.vertex_count):
        out.append(" ".join(str(new_id[h // 2]) for h in g.out_half_edges(v)))
    return "\n".join(out) + "\n"
