"""Seeded random graph generators for tests and benchmarks."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Sequence

from .graph import Graph, VertexSet


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) with vertex labels '0'..'n-1'."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def planted_instance(n: int, p: float, plant_sizes: Sequence[int],
                     rng: random.Random) -> tuple[Graph, list[VertexSet]]:
    """G(n, p) background plus vertex-disjoint planted cliques.

    Returns the graph and the planted vertex sets (each a clique, hence a
    quasi-clique at every gamma).
    """
    if sum(plant_sizes) > n:
        raise ValueError("planted sets need more vertices than n provides")
    ids = list(range(n))
    rng.shuffle(ids)
    plants = []
    at = 0
    for size in plant_sizes:
        if size < 2:
            raise ValueError("plant sizes must be >= 2")
        plants.append(frozenset(ids[at:at + size]))
        at += size
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    for plant in plants:
        edges.extend(combinations(sorted(plant), 2))
    return Graph(n, edges), plants
