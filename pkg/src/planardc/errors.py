"""Exception types shared across the package."""


class StructureError(Exception):
    """A graph or derived structure violates a structural invariant.

    Raised for malformed rotation systems, face walks that fail to close,
    or rotation systems that do not describe a planar embedding.
    """


class InvariantError(Exception):
    """An internal bookkeeping invariant was violated.

    This always indicates a bug or corrupted state, never bad user input:
    Euler counts that cannot describe a graph, identifier overflow, or a
    counter exceeding its proven bound.
    """
