"""Seedable RNG streams, one per (module label, seed) pair.

String seeds go through random.Random's sha512 path, so streams are stable
across runs and platforms and two modules never share a stream for the
same user-facing seed.
"""

import random


def seeded_rng(seed: int, label: str) -> random.Random:
    return random.Random(f"{label}:{seed}")
