"""Small graph builders shared across the test modules."""
from itertools import combinations

from quasik.graph import Graph


def complete_graph(n: int, labels=None) -> Graph:
    return Graph(n, combinations(range(n), 2), labels=labels)


def empty_graph(n: int) -> Graph:
    return Graph(n, [])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_cliques(*sizes: int) -> Graph:
    """Vertex-disjoint cliques laid out block after block."""
    edges = []
    at = 0
    for size in sizes:
        edges.extend((at + i, at + j) for i, j in combinations(range(size), 2))
        at += size
    return Graph(at, edges)


def gnp_graph(rng, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)
