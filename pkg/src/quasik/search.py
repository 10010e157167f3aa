"""Streaming enumeration of all quasi-cliques extending a seed set.

The search walks a set-enumeration tree over a fixed vertex order (descending
degree, ties by id): each node owns a current set and an ordered candidate
list, and each subset of the eligible universe is visited exactly once.  The
quasi-clique predicate is NOT hereditary -- a subset of a quasi-clique need
not be one -- so sets are tested at emission and never used to cut prefixes.

Every pruning rule is individually flag-gated and completeness-preserving:

* size_bound   -- abandon a node once current + remaining candidates cannot
                  reach min_size.
* degree_bound -- a vertex whose global degree is below
                  degree_threshold(gamma, min_size) can appear in no emitted
                  set, so it never enters the candidate universe.
* frontier     -- for gamma >= 1/2 every quasi-clique has diameter <= 2, so
                  candidates shrink to the distance-<=2 ball of each chosen
                  vertex (exact common neighbors when gamma == 1).  Disabled
                  for gamma < 1/2.
* deficiency   -- drop, to a fixpoint, every candidate whose degree inside
                  current-plus-candidates is below degree_threshold(gamma,
                  min_size) (it can reach that degree in no emitted superset),
                  then abandon the subtree when some chosen vertex cannot
                  reach the threshold even if every surviving adjacent
                  candidate is taken (conservative: the threshold uses
                  min_size only, never the current size).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .graph import Graph, VertexSet, connected_mask
from .qc import degree_threshold, ensure_gamma

_HALF = Fraction(1, 2)
_DEADLINE_STRIDE = 2048


class SearchTimeout(RuntimeError):
    """Raised when an enumeration exceeds its deadline."""


@dataclass
class SearchNode:
    """One frame of the iterative DFS, in local (compacted) vertex ids."""

    current: int                 # bitmask of chosen vertices
    size: int
    cands: tuple[int, ...]       # candidates still open, in search order
    next_index: int = 0


@dataclass(frozen=True)
class PruneFlags:
    """Switchboard for the pruning rules (all on by default)."""

    size_bound: bool = True
    degree_bound: bool = True
    frontier: bool = True
    deficiency: bool = True

    @classmethod
    def none(cls) -> "PruneFlags":
        return cls(False, False, False, False)


def enumerate_qcs(g: Graph, seed: Iterable[int], gamma: Fraction | str,
                  min_size: int, *, flags: PruneFlags = PruneFlags(),
                  deadline: float | None = None) -> Iterator[VertexSet]:
    """Yield exactly the sets S with seed <= S <= V(g), |S| >= min_size and
    S a gamma-quasi-clique, each once, in deterministic order."""
    gamma = ensure_gamma(gamma)
    if min_size < 2:
        raise ValueError("min_size must be >= 2")
    seed_set = frozenset(seed)
    for v in seed_set:
        if not (0 <= v < g.n):
            raise ValueError(f"seed vertex {v} out of range")
    return _run(g, seed_set, gamma, min_size, flags, deadline)


def _run(g: Graph, seed: VertexSet, gamma: Fraction, min_size: int,
         flags: PruneFlags, deadline: float | None) -> Iterator[VertexSet]:
    thr_floor = degree_threshold(gamma, min_size)

    # Rule (degree_bound): global-degree eligibility for the whole run.
    if flags.degree_bound:
        if any(g.degree(v) < thr_floor for v in seed):
            return
        universe = [v for v in range(g.n) if g.degree(v) >= thr_floor]
    else:
        universe = list(range(g.n))

    if len(seed | set(universe)) < min_size:
        return
    # Compact to local ids so all hot-path work is small-int bitmask ops.
    gids = sorted(set(universe) | seed)
    lid = {v: i for i, v in enumerate(gids)}
    rows = []
    for v in gids:
        row = 0
        for w in g.adj_sets[v]:
            j = lid.get(w)
            if j is not None:
                row |= 1 << j
        rows.append(row)
    nloc = len(gids)
    full = (1 << nloc) - 1
    seed_mask = 0
    for v in seed:
        seed_mask |= 1 << lid[v]

    use_frontier = flags.frontier and gamma >= _HALF
    ball2: dict[int, int] = {}

    def frontier_row(v: int) -> int:
        # gamma == 1: extensions must be common neighbors.  Otherwise the
        # distance-<=2 ball (within the eligible universe; any future set
        # lives inside it, so its internal distances only shrink further).
        if gamma == 1:
            return rows[v]
        got = ball2.get(v)
        if got is None:
            got = (1 << v) | rows[v]
            m = rows[v]
            while m:
                low = m & -m
                got |= rows[low.bit_length() - 1]
                m ^= low
            ball2[v] = got
        return got

    cand_mask = full & ~seed_mask
    if seed:
        # Base restriction: a connected superset of the seed stays inside the
        # seed's component of the eligible universe.
        comp = _component(rows, lid[min(seed)])
        if seed_mask & comp != seed_mask:
            return
        cand_mask &= comp
        if use_frontier:
            m = seed_mask
            while m:
                low = m & -m
                cand_mask &= frontier_row(low.bit_length() - 1)
                m ^= low
            cand_mask &= ~seed_mask

    # Search order: descending global degree, ties by ascending id.
    order = sorted((l for l in range(nloc) if cand_mask >> l & 1),
                   key=lambda l: (-g.degree(gids[l]), gids[l]))

    thr = [0] + [degree_threshold(gamma, s) for s in range(1, nloc + 1)]

    def emit_ok(mask: int, size: int) -> bool:
        t = thr[size]
        m = mask
        while m:
            low = m & -m
            if (rows[low.bit_length() - 1] & mask).bit_count() < t:
                return False
            m ^= low
        return connected_mask(rows, mask)

    def to_global(mask: int) -> VertexSet:
        out = []
        while mask:
            low = mask & -mask
            out.append(gids[low.bit_length() - 1])
            mask ^= low
        return frozenset(out)

    seed_size = len(seed)
    if seed_size >= min_size and emit_ok(seed_mask, seed_size):
        yield to_global(seed_mask)

    if flags.deficiency:
        cand_mask = _peel_deficient(rows, seed_mask, cand_mask, thr_floor)
        m = seed_mask
        while m:
            low = m & -m
            r = rows[low.bit_length() - 1]
            if (r & seed_mask).bit_count() + (r & cand_mask).bit_count() < thr_floor:
                return
            m ^= low
        order = [l for l in order if cand_mask >> l & 1]

    stack = [SearchNode(seed_mask, seed_size, tuple(order))]
    steps = 0
    while stack:
        node = stack[-1]
        avail = len(node.cands) - node.next_index
        if avail == 0 or (flags.size_bound and node.size + avail < min_size):
            stack.pop()
            continue
        steps += 1
        if deadline is not None and steps % _DEADLINE_STRIDE == 0:
            if time.monotonic() > deadline:
                raise SearchTimeout("enumeration exceeded its time budget")
        i = node.next_index
        node.next_index = i + 1
        v = node.cands[i]
        new_mask = node.current | (1 << v)
        new_size = node.size + 1
        if new_size >= min_size and emit_ok(new_mask, new_size):
            yield to_global(new_mask)
        rest = node.cands[i + 1:]
        if not rest:
            continue
        if use_frontier:
            keep = frontier_row(v)
            rest = tuple(u for u in rest if keep >> u & 1)
            if not rest:
                continue
        if flags.deficiency:
            rest_mask = 0
            for u in rest:
                rest_mask |= 1 << u
            rest_mask = _peel_deficient(rows, new_mask, rest_mask, thr_floor)
            bad = False
            m = new_mask
            while m:
                low = m & -m
                r = rows[low.bit_length() - 1]
                if (r & new_mask).bit_count() + (r & rest_mask).bit_count() < thr_floor:
                    bad = True
                    break
                m ^= low
            if bad:
                continue
            if rest_mask.bit_count() != len(rest):
                rest = tuple(u for u in rest if rest_mask >> u & 1)
                if not rest:
                    continue
        stack.append(SearchNode(new_mask, new_size, rest))


def _peel_deficient(rows: list[int], current: int, cands: int,
                    thr_floor: int) -> int:
    """Drop candidates that cannot reach thr_floor neighbors inside
    current | cands, iterating until stable (removals lower the counts of the
    survivors, so the rule is re-applied to a fixpoint)."""
    while cands:
        removed = 0
        within = current | cands
        m = cands
        while m:
            low = m & -m
            if (rows[low.bit_length() - 1] & within).bit_count() < thr_floor:
                removed |= low
            m ^= low
        if not removed:
            break
        cands &= ~removed
    return cands


def _component(rows: list[int], start: int) -> int:
    reached = 1 << start
    frontier = reached
    while frontier:
        grow = 0
        m = frontier
        while m:
            low = m & -m
            grow |= rows[low.bit_length() - 1]
            m ^= low
        frontier = grow & ~reached
        reached |= frontier
    return reached


def candidate_frontier(g: Graph, current: Iterable[int],
                       gamma: Fraction | str) -> VertexSet:
    """A superset of every vertex that can extend ``current`` into some
    larger gamma-quasi-clique.

    gamma == 1: exactly the common neighborhood of ``current``.
    gamma >= 1/2: vertices within distance 2 of every member (quasi-cliques
    have diameter <= 2 there).  gamma < 1/2: the member component, minus
    ``current`` -- only connectivity constrains the frontier.
    """
    gamma = ensure_gamma(gamma)
    members = frozenset(current)
    if not members:
        raise ValueError("current set must be nonempty")
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex id {v} out of range")
    if gamma == 1:
        out: set[int] | None = None
        for v in members:
            out = set(g.adj_sets[v]) if out is None else out & g.adj_sets[v]
        return frozenset(out or ()) - members
    if gamma >= _HALF:
        out = None
        for v in members:
            ball = {v} | set(g.adj_sets[v])
            for w in g.adj_sets[v]:
                ball |= g.adj_sets[w]
            out = ball if out is None else out & ball
        return frozenset(out or ()) - members
    # gamma < 1/2: everything reachable from the (necessarily connected-able)
    # current component is fair game.
    start = min(members)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj_sets[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if not members <= seen:
        return frozenset()
    return frozenset(seen) - members
