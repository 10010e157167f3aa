"""Reduction gadget tying clique detection to quasi-clique maximality.

Around an input graph G' we build three fully-internal cliques A1 (r^2
vertices), A2 (r^2) and B (r), joining A1-A2 and A1-B completely, leaving
A2-B empty, and joining A1 to every vertex of G'.  With

    gamma = (r^2 + r - 1) / (2r^2 + 2r - 1)

the block X = A1 + A2 + B (2r^2 + r vertices, min internal degree exactly
r^2 + r - 1) is a gamma-quasi-clique, and X is non-maximal in the combined
graph if and only if G' contains a clique on r vertices.  That biconditional
is what makes maximality testing as hard as clique detection; here it powers
adversarial tests for the mining code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import Graph, VertexSet
from .oracle import has_clique_bruteforce, is_maximal_bruteforce

VERIFY_MAX_PRIME_N = 20


@dataclass(frozen=True)
class GadgetInstance:
    """A built reduction instance: the combined graph plus block bookkeeping."""

    graph: Graph
    x: VertexSet            # A1 + A2 + B
    gamma: Fraction
    r: int
    a1: VertexSet
    a2: VertexSet
    b: VertexSet

    @property
    def part_sizes(self) -> tuple[int, int, int]:
        return (len(self.a1), len(self.a2), len(self.b))


def gadget_gamma(r: int) -> Fraction:
    if r < 2:
        raise ValueError("r must be >= 2")
    return Fraction(r * r + r - 1, 2 * r * r + 2 * r - 1)


def build_gadget(g_prime: Graph, r: int) -> GadgetInstance:
    """Attach the three-block gadget to ``g_prime``.

    Gadget vertices take labels ``A1_i`` / ``A2_i`` / ``B_i`` after the
    original labels, which must not collide with them.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if g_prime.n == 0:
        raise ValueError("the base graph must have at least one vertex")
    np = g_prime.n
    r2 = r * r
    a1 = tuple(range(np, np + r2))
    a2 = tuple(range(np + r2, np + 2 * r2))
    b = tuple(range(np + 2 * r2, np + 2 * r2 + r))
    labels = list(g_prime.labels)
    labels += [f"A1_{i}" for i in range(r2)]
    labels += [f"A2_{i}" for i in range(r2)]
    labels += [f"B_{i}" for i in range(r)]
    if len(set(labels)) != len(labels):
        raise ValueError("base graph labels collide with gadget labels A1_*/A2_*/B_*")

    edges = list(g_prime.edges())
    for block in (a1, a2, b):
        edges.extend(combinations(block, 2))     # each block is a clique
    edges.extend((u, v) for u in a1 for v in a2)  # A1 - A2 complete
    edges.extend((u, v) for u in a1 for v in b)   # A1 - B complete
    edges.extend((u, v) for u in a1 for v in range(np))  # A1 - G' complete
    graph = Graph(np + 2 * r2 + r, edges, labels=labels)
    return GadgetInstance(graph=graph,
                          x=frozenset(a1) | frozenset(a2) | frozenset(b),
                          gamma=gadget_gamma(r), r=r,
                          a1=frozenset(a1), a2=frozenset(a2), b=frozenset(b))


def verify_gadget_theorem(instance: GadgetInstance, g_prime: Graph) -> bool:
    """Check the reduction biconditional by brute force on both sides:
    X non-maximal in the gadget graph  <=>  g_prime has an r-clique."""
    if g_prime.n > VERIFY_MAX_PRIME_N:
        raise ValueError(
            f"refusing verification with {g_prime.n} > {VERIFY_MAX_PRIME_N} base vertices")
    non_maximal = not is_maximal_bruteforce(instance.graph, instance.x,
                                            instance.gamma)
    return non_maximal == has_clique_bruteforce(g_prime, instance.r)
