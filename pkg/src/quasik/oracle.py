"""Brute-force reference implementations, kept deliberately free of cleverness.

Everything here walks explicit power sets with guards on input size, so the
answers are obviously correct and can anchor the tests for the real mining
code.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .graph import Graph, VertexSet, mask_of, set_of_mask
from .qc import _mask_is_qc, degree_threshold, ensure_gamma

# Refuse exhaustive sweeps beyond this many vertices (2^25 subsets).
ORACLE_MAX_N = 25
# is_maximal only needs the complement of the candidate set to be small.
ORACLE_MAX_FREE = 20


def ranked(sets: Iterable[VertexSet]) -> list[VertexSet]:
    """Canonical order: size non-increasing, ties lexicographic on sorted ids."""
    return sorted(set(map(frozenset, sets)), key=lambda s: (-len(s), tuple(sorted(s))))


def enumerate_all_qcs_bruteforce(g: Graph, gamma: Fraction | str, min_size: int = 2,
                                 *, max_vertices: int = ORACLE_MAX_N) -> list[VertexSet]:
    """Every gamma-quasi-clique of size >= min_size, by scanning all subsets."""
    gamma = ensure_gamma(gamma)
    if min_size < 2:
        raise ValueError("min_size must be >= 2")
    if g.n > max_vertices:
        raise ValueError(
            f"refusing exhaustive enumeration on n={g.n} > {max_vertices} vertices")
    rows = g.adj_bits
    assert rows is not None  # n <= 25 always has bitset rows
    thr = [0] + [degree_threshold(gamma, s) for s in range(1, g.n + 1)]
    found = []
    for mask in range(1, 1 << g.n):
        size = mask.bit_count()
        if size >= min_size and _mask_is_qc(rows, mask, thr[size]):
            found.append(set_of_mask(mask))
    return ranked(found)


def is_maximal_bruteforce(g: Graph, s: Iterable[int], gamma: Fraction | str,
                          *, max_vertices: int = ORACLE_MAX_N) -> bool:
    """True iff no strict superset of ``s`` is a gamma-quasi-clique."""
    gamma = ensure_gamma(gamma)
    members = frozenset(s)
    if not members:
        raise ValueError("empty set cannot be checked for maximality")
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex id {v} out of range")
    free = [v for v in range(g.n) if v not in members]
    if g.n > max_vertices and len(free) > ORACLE_MAX_FREE:
        raise ValueError(
            f"refusing brute-force maximality check: n={g.n} and "
            f"{len(free)} free vertices both exceed the guards")
    rows = g.adj_bits
    assert rows is not None
    base = mask_of(members)
    thr = [0] + [degree_threshold(gamma, size) for size in range(1, g.n + 1)]
    for extra in range(1, 1 << len(free)):
        mask = base
        size = len(members)
        e = extra
        while e:
            low = e & -e
            mask |= 1 << free[low.bit_length() - 1]
            size += 1
            e ^= low
        if _mask_is_qc(rows, mask, thr[size]):
            return False
    return True


def topk_bruteforce(g: Graph, gamma: Fraction | str, min_size: int, k: int,
                    *, max_vertices: int = ORACLE_MAX_N) -> list[VertexSet]:
    """The k largest maximal gamma-quasi-cliques, maximality re-verified
    set-by-set with :func:`is_maximal_bruteforce`."""
    if k < 1:
        raise ValueError("k must be >= 1")
    all_qcs = enumerate_all_qcs_bruteforce(g, gamma, min_size,
                                           max_vertices=max_vertices)
    kept: list[VertexSet] = []
    for s in all_qcs:  # already in canonical order
        if len(kept) == k:
            break
        if is_maximal_bruteforce(g, s, gamma, max_vertices=max_vertices):
            kept.append(s)
    return kept


def has_clique_bruteforce(g: Graph, r: int) -> bool:
    """True iff g contains a clique on r vertices (r >= 1)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if r == 1:
        return g.n >= 1
    for combo in combinations(range(g.n), r):
        if all(g.has_edge(u, v) for u, v in combinations(combo, 2)):
            return True
    return False
