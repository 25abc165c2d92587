"""Two parallel searches that identify the smaller side of a split.

The two searches alternate turns; one turn discovers exactly one new
vertex (or detects exhaustion).  The search that exhausts first has
therefore visited at most one more vertex than the other had discovered,
which bounds the returned side by ceil(|C| / 2) vertices.  The search from
the first seed moves first, so on equal sizes the first seed's side wins;
callers pass the tie-preferred seed first.
"""


class _Search:
    __slots__ = ("visited", "stack")

    def __init__(self, seed, neighbor_iter):
        self.visited = {seed}
        self.stack = [neighbor_iter(seed)]

    def advance(self, neighbor_iter, visited_bump) -> bool:
        """Discover one new vertex; True when the side is exhausted."""
        stack = self.stack
        visited = self.visited
        while stack:
            it = stack[-1]
            for w in it:
                visited_bump()
                if w not in visited:
                    visited.add(w)
                    stack.append(neighbor_iter(w))
                    return False
            stack.pop()
        return True


def smaller_side(seed_a, seed_b, neighbor_iter, visited_bump) -> set:
    """Vertices of the side of seed_a or seed_b that exhausts first.

    The seeds must lie in different components of the graph induced by
    neighbor_iter.  visited_bump is called once per examined neighbour (the
    work counter hook).
    """
    searches = (_Search(seed_a, neighbor_iter), _Search(seed_b, neighbor_iter))
    turn = 0
    while True:
        if searches[turn].advance(neighbor_iter, visited_bump):
            return searches[turn].visited
        turn ^= 1
