"""The degree-based quasi-clique predicate and its exact density threshold.

A set S is a gamma-quasi-clique of G when the subgraph G[S] is connected and
every member has internal degree >= ceil(gamma * (|S| - 1)).  gamma lives in
(0, 1] and is always an exact rational: the ceiling flips on exact multiples,
so machine floats are never accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph, connected_mask, is_connected, mask_of, set_of_mask

Gamma = Fraction


def parse_gamma(text: str) -> Fraction:
    """Parse '0.6', '1', or 'p/q' into an exact rational in (0, 1]."""
    try:
        value = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a valid gamma value: {text!r}") from exc
    return ensure_gamma(value)


def ensure_gamma(value: Fraction | int | str) -> Fraction:
    """Validate/convert a gamma value, rejecting floats outright."""
    if isinstance(value, float):
        raise TypeError("gamma must be exact: pass a string like '0.6' or a Fraction")
    if isinstance(value, str):
        return parse_gamma(value)
    value = Fraction(value)
    if not 0 < value <= 1:
        raise ValueError(f"gamma must be in (0, 1], got {value}")
    return value


def degree_threshold(gamma: Fraction, m: int) -> int:
    """ceil(gamma * (m - 1)) in exact integer arithmetic."""
    gamma = ensure_gamma(gamma)
    if m < 1:
        raise ValueError(f"set size must be >= 1, got {m}")
    p, q = gamma.numerator, gamma.denominator
    return -(-(p * (m - 1)) // q)


def _mask_is_qc(rows: Sequence[int], mask: int, thr: int) -> bool:
    """Predicate core over bitset rows: min internal degree + connectivity."""
    m = mask
    while m:
        low = m & -m
        if (rows[low.bit_length() - 1] & mask).bit_count() < thr:
            return False
        m ^= low
    return connected_mask(rows, mask)


def _set_is_qc(adj_sets: Sequence[frozenset[int]], s: set[int], thr: int) -> bool:
    """Predicate core over adjacency sets (graphs too large for bitsets)."""
    for v in s:
        if len(adj_sets[v] & s) < thr:
            return False
    # connectivity
    start = next(iter(s))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj_sets[v]:
            if w in s and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(s)


def is_quasi_clique(g: Graph, s: Iterable[int], gamma: Fraction | str) -> bool:
    """True iff ``s`` induces a connected subgraph with min internal degree
    >= ceil(gamma * (|s| - 1))."""
    gamma = ensure_gamma(gamma)
    members = set(s)
    if not members:
        raise ValueError("the empty set is not a valid quasi-clique candidate")
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex id {v} out of range")
    thr = degree_threshold(gamma, len(members))
    if g.adj_bits is not None:
        return _mask_is_qc(g.adj_bits, mask_of(members), thr)
    return _set_is_qc(g.adj_sets, members, thr)


def is_quasi_clique_mask(g: Graph, mask: int, gamma: Fraction | str) -> bool:
    """Bitmask form of :func:`is_quasi_clique` (requires bitset rows)."""
    if g.adj_bits is None:
        return is_quasi_clique(g, set_of_mask(mask), gamma)
    if mask == 0:
        raise ValueError("the empty set is not a valid quasi-clique candidate")
    gamma = ensure_gamma(gamma)
    thr = degree_threshold(gamma, mask.bit_count())
    return _mask_is_qc(g.adj_bits, mask, thr)


def min_internal_degree(g: Graph, s: Iterable[int]) -> int:
    members = set(s)
    if not members:
        raise ValueError("empty set has no internal degree")
    return min(len(g.adj_sets[v] & members) for v in members)


@dataclass(frozen=True)
class QuasiCliqueRecord:
    """A validated quasi-clique prepared for output."""

    vertices: tuple[int, ...]  # ascending ids
    size: int
    min_internal_degree: int

    @classmethod
    def from_set(cls, g: Graph, s: Iterable[int]) -> "QuasiCliqueRecord":
        ids = tuple(sorted(set(s)))
        return cls(vertices=ids, size=len(ids),
                   min_internal_degree=min_internal_degree(g, ids))

    def to_json_dict(self, g: Graph) -> dict:
        return {"vertices": [g.labels[v] for v in self.vertices], "size": self.size}
