"""Seeded random graphs for the verification suites.

Everything takes an explicit seed and uses its own ``random.Random``, so
suites are reproducible and independent of global RNG state.
"""

from __future__ import annotations

import random

from turanlab.core import BipartiteGraph, SimpleGraph


def gnp(n: int, p: float, seed: int) -> SimpleGraph:
    """Erdos-Renyi G(n, p)."""
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return SimpleGraph.from_edges(n, edges)


def gnp_bipartite(n1: int, n2: int, p: float, seed: int) -> BipartiteGraph:
    """Random bipartite graph; side 0 is the first n1 vertices."""
    rng = random.Random(seed)
    edges = [
        (u, n1 + v) for u in range(n1) for v in range(n2) if rng.random() < p
    ]
    side = [0] * n1 + [1] * n2
    return BipartiteGraph.from_edges(n1 + n2, edges, side)


def random_tree(n: int, seed: int) -> SimpleGraph:
    """Uniform attachment tree: vertex v > 0 joins a random earlier vertex.
    Trees satisfy every cycle-freeness hypothesis at once."""
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return SimpleGraph.from_edges(n, edges)
