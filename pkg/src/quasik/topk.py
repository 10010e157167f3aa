"""Top-k selection of maximal quasi-cliques: exact baseline and the
kernel-expansion heuristic.

The heuristic first enumerates "kernels" -- quasi-cliques at a stricter
density gamma' > gamma -- keeps the k' largest maximal ones, then re-runs the
enumerator seeded with each kernel at the target gamma and reduces the union
of expansions to the k largest maximal sets.  Every returned set is a maximal
gamma-quasi-clique of the whole graph (the expansion pass enumerates ALL
supersets of a kernel, so nothing strictly larger can be missed); which k
come back is heuristic.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graph import Graph, VertexSet
from .qc import ensure_gamma
from .search import PruneFlags, enumerate_qcs

log = logging.getLogger("quasik")

DEFAULT_GAMMA_STEP = Fraction(1, 5)
DEFAULT_KPRIME_FACTOR = 3
DEFAULT_BUFFER_FACTOR = 8


@dataclass(frozen=True)
class TopKParams:
    """Validated parameter bundle for the top-k searches."""

    gamma: Fraction
    gamma_prime: Fraction
    k: int
    k_prime: int
    min_size: int = 5

    def __post_init__(self):
        object.__setattr__(self, "gamma", ensure_gamma(self.gamma))
        object.__setattr__(self, "gamma_prime", ensure_gamma(self.gamma_prime))
        if not self.gamma < self.gamma_prime <= 1:
            raise ValueError(
                f"need gamma < gamma_prime <= 1, got {self.gamma} / {self.gamma_prime}")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.k_prime < self.k:
            raise ValueError("k_prime must be >= k")
        if self.min_size < 2:
            raise ValueError("min_size must be >= 2")

    @classmethod
    def with_defaults(cls, gamma: Fraction | str, k: int, *,
                      gamma_prime: Fraction | str | None = None,
                      k_prime: int | None = None,
                      min_size: int = 5) -> "TopKParams":
        """Fill gamma' = min(1, gamma + 1/5) and k' = 3k when unspecified."""
        gamma = ensure_gamma(gamma)
        if gamma_prime is None:
            gamma_prime = min(Fraction(1), gamma + DEFAULT_GAMMA_STEP)
        if k_prime is None:
            k_prime = DEFAULT_KPRIME_FACTOR * k
        return cls(gamma=gamma, gamma_prime=ensure_gamma(gamma_prime),
                   k=k, k_prime=k_prime, min_size=min_size)


@dataclass
class RunStats:
    """Counters a top-k run fills in for reporting."""

    kernel_count: int = 0
    expansion_count: int = 0
    peak_candidates: int = 0

    def bump_peak(self, value: int) -> None:
        if value > self.peak_candidates:
            self.peak_candidates = value


def _rank_key(s: VertexSet):
    return (-len(s), tuple(sorted(s)))


def k_max(sets: Iterable[VertexSet], k: int) -> list[VertexSet]:
    """The k largest members of ``sets`` not strictly contained in any other
    member.  Duplicates collapse first; scan order is size non-increasing with
    lexicographic tie-breaks, so the kept list is exactly the k best maximal
    elements in canonical order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    unique = {frozenset(s) for s in sets}
    kept: list[VertexSet] = []
    for s in sorted(unique, key=_rank_key):
        if len(kept) == k:
            break
        if not any(s < q for q in kept):
            kept.append(s)
    return kept


class _TopBuffer:
    """Bounded holder of the best sets under the canonical (size, lex) rank.

    Truncation is safe for the final k_max pass: a strict superset always
    outranks its subsets, so it can never be evicted while a subset stays.
    """

    def __init__(self, capacity: int):
        self.capacity = max(1, capacity)
        self._sets: set[VertexSet] = set()
        self.peak = 0

    def add(self, s: VertexSet) -> None:
        self._sets.add(s)
        if len(self._sets) > self.peak:
            self.peak = len(self._sets)
        if len(self._sets) > 2 * self.capacity:
            self._trim()

    def update(self, sets: Iterable[VertexSet]) -> None:
        for s in sets:
            self.add(s)

    def _trim(self) -> None:
        self._sets = set(sorted(self._sets, key=_rank_key)[: self.capacity])

    def ranked(self) -> list[VertexSet]:
        return sorted(self._sets, key=_rank_key)[: self.capacity]


def naive_qc(g: Graph, gamma: Fraction | str, min_size: int, k: int, *,
             flags: PruneFlags = PruneFlags(), deadline: float | None = None,
             stats: RunStats | None = None) -> list[VertexSet]:
    """Exact baseline: enumerate every gamma-quasi-clique, keep the k largest
    maximal ones."""
    everything = list(enumerate_qcs(g, (), gamma, min_size, flags=flags,
                                    deadline=deadline))
    if stats is not None:
        stats.expansion_count = len(everything)
        stats.bump_peak(len(everything))
    return k_max(everything, k)


def _expand_one(args) -> tuple[list[VertexSet], int]:
    """Expansion task: all gamma-quasi-cliques containing one kernel,
    truncated to the buffer capacity under the canonical rank."""
    g, kernel, gamma, min_size, flags, capacity, deadline = args
    buf = _TopBuffer(capacity)
    count = 0
    for s in enumerate_qcs(g, kernel, gamma, min_size, flags=flags,
                           deadline=deadline):
        buf.add(s)
        count += 1
    return buf.ranked(), count


def kqc(g: Graph, params: TopKParams, *, flags: PruneFlags = PruneFlags(),
        workers: int = 1, buffer_factor: int = DEFAULT_BUFFER_FACTOR,
        deadline: float | None = None,
        stats: RunStats | None = None) -> list[VertexSet]:
    """Kernel-expansion heuristic for the k largest maximal quasi-cliques.

    Detection runs the enumerator at gamma' to collect kernels and keeps the
    k' largest maximal ones; each kernel is then expanded by re-enumerating at
    gamma seeded with it.  Expansions stream into a bounded best-first buffer
    (capacity k' * buffer_factor) and a final k_max pass reduces to k."""
    kernels = list(enumerate_qcs(g, (), params.gamma_prime, params.min_size,
                                 flags=flags, deadline=deadline))
    if stats is not None:
        stats.bump_peak(len(kernels))
    chosen = k_max(kernels, params.k_prime) if kernels else []
    if stats is not None:
        stats.kernel_count = len(chosen)
    if not chosen:
        log.warning("no kernels of size >= %d found at gamma'=%s; "
                    "returning no quasi-cliques", params.min_size,
                    params.gamma_prime)
        return []
    capacity = params.k_prime * max(1, buffer_factor)
    buf = _TopBuffer(capacity)
    total = 0
    tasks = [(g, kernel, params.gamma, params.min_size, flags, capacity,
              deadline) for kernel in chosen]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            for part, count in pool.map(_expand_one, tasks):
                buf.update(part)
                total += count
    else:
        for task in tasks:
            part, count = _expand_one(task)
            buf.update(part)
            total += count
    if stats is not None:
        stats.expansion_count = total
        stats.bump_peak(buf.peak)
    return k_max(buf.ranked(), params.k)


def resolve_workers(value: int | None = None) -> int:
    """Worker count: explicit value, else QUASIK_WORKERS, else cpu count."""
    if value is not None:
        if value < 1:
            raise ValueError("workers must be >= 1")
        return value
    env = os.environ.get("QUASIK_WORKERS")
    if env:
        try:
            parsed = int(env)
        except ValueError:
            raise ValueError(f"QUASIK_WORKERS must be an integer, got {env!r}")
        if parsed < 1:
            raise ValueError("QUASIK_WORKERS must be >= 1")
        return parsed
    return os.cpu_count() or 1
