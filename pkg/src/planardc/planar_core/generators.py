"""Deterministic embedded planar graph generators for the test corpus."""

import math

from ..rand import seeded_rng
from .graph import PlanarGraph
from .surgery import add_chord, add_edge_to_isolated

KINDS = ("grid", "stacked_triangulation", "cycle", "path")


def generate(kind: str, n: int, rng_seed: int = 0) -> PlanarGraph:
    """Build an embedded planar graph of the given family and size.

    The rotation system is deterministic given (kind, n, rng_seed).
    stacked_triangulation starts from a triangle and repeatedly joins a new
    vertex to the three corners of a uniformly random face.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if kind == "grid":
        return _grid(n)
    if kind == "cycle":
        return _cycle(n)
    if kind == "path":
        return _path(n)
    if kind == "stacked_triangulation":
        return _stacked(n, rng_seed)
    raise ValueError(f"unknown graph kind {kind!r}; expected one of {KINDS}")


def _grid(n: int) -> PlanarGraph:
    k = math.isqrt(n)
    if k * k != n:
        raise ValueError(f"grid needs a square vertex count, got {n}")
    def vid(r, c):
        return r * k + c
    edges = []
    east = {}
    north = {}
    for r in range(k):
        for c in range(k):
            if c + 1 < k:
                east[(r, c)] = len(edges)
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < k:
                north[(r, c)] = len(edges)
                edges.append((vid(r, c), vid(r + 1, c)))
    rotations = []
    for r in range(k):
        for c in range(k):
            rot = []
            if (r, c) in east:
                rot.append(east[(r, c)])
            if (r, c) in north:
                rot.append(north[(r, c)])
            if (r, c - 1) in east:
                rot.append(east[(r, c - 1)])
            if (r - 1, c) in north:
                rot.append(north[(r - 1, c)])
            rotations.append(rot)
    return PlanarGraph.from_rotations(n, edges, rotations)


def _cycle(n: int) -> PlanarGraph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    rotations = [[(i - 1) % n, i] for i in range(n)]
    return PlanarGraph.from_rotations(n, edges, rotations)


def _path(n: int) -> PlanarGraph:
    edges = [(i, i + 1) for i in range(n - 1)]
    rotations = []
    for i in range(n):
        rot = []
        if i > 0:
            rot.append(i - 1)
        if i < n - 1:
            rot.append(i)
        rotations.append(rot)
    return PlanarGraph.from_rotations(n, edges, rotations)


def _stacked(n: int, rng_seed: int) -> PlanarGraph:
    if n < 3:
        raise ValueError(f"stacked_triangulation needs n >= 3, got {n}")
    rng = seeded_rng(rng_seed, "gen.stacked")
    g = PlanarGraph(n)
    e01 = g.add_edge_isolated(0, 1)
    e12 = add_edge_to_isolated(g, 2 * e01, 2)      # position head(2e01)=1
    # close the triangle: chord between head=0 and head=2 positions
    e20 = add_chord(g, 2 * e01 + 1, 2 * e12)
    h01, h12, h20 = 2 * e01, 2 * e12, 2 * e20
    # walk triples (x->y, y->z, z->x); both sides of the triangle are faces
    faces = [(h01, h12, h20 ^ 1)]
    faces.append((h20, h12 ^ 1, h01 ^ 1))
    for x in range(3, n):
        idx = rng.randrange(len(faces))
        ha, hb, hc = faces[idx]
        # vertices a -> b -> c around the face; join x to all three corners
        e_a = add_edge_to_isolated(g, hc, x)       # head(hc) = a
        p_a = 2 * e_a                              # a -> x
        e_b = add_chord(g, p_a, ha)                # x -> b
        p_b, q_b = 2 * e_b, 2 * e_b + 1
        e_c = add_chord(g, p_a, hb)                # x -> c
        p_c, q_c = 2 * e_c, 2 * e_c + 1
        faces[idx] = (ha, q_b, p_a ^ 1)            # a->b, b->x, x->a
        faces.append((hb, q_c, p_b))               # b->c, c->x, x->b
        faces.append((hc, p_a, p_c))               # c->a, a->x, x->c
    return g
