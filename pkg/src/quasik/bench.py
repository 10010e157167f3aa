"""Benchmark harness: timed heuristic-vs-exact grids and kernel profiling.

``run_grid`` times the kernel-expansion heuristic against the exact baseline
over a parameter grid with a per-cell budget and reports CSV rows.
``kernel_profile`` measures how often sampled quasi-cliques contain denser
quasi-cliques of a given size -- the empirical backing for choosing gamma'.
"""

from __future__ import annotations

import csv
import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import IO, Iterable, Sequence

from .graph import Graph, VertexSet, induced_subgraph
from .metrics import error_percent, pad_pair
from .qc import ensure_gamma
from .search import PruneFlags, SearchTimeout, enumerate_qcs
from .topk import RunStats, TopKParams, kqc, naive_qc

log = logging.getLogger("quasik")

CSV_COLUMNS = ["graph", "gamma", "gamma_prime", "k", "k_prime", "min_size",
               "algo", "wall_ms", "sizes", "error_pct", "status", "speedup",
               "padded"]


@dataclass
class RunReport:
    """Outcome of one timed algorithm run on one parameter cell."""

    graph: str
    params: TopKParams
    algo: str                      # "kqc" | "naive"
    sizes: tuple[int, ...]
    wall_ms: float
    status: str                    # "ok" | "timeout" | "error"
    error_percent: float | None = None
    padded: bool = False
    speedup: float | None = None
    kernel_count: int = 0
    expansion_count: int = 0
    peak_candidates: int = 0

    def csv_row(self) -> dict:
        p = self.params
        return {
            "graph": self.graph,
            "gamma": str(p.gamma),
            "gamma_prime": str(p.gamma_prime),
            "k": p.k,
            "k_prime": p.k_prime,
            "min_size": p.min_size,
            "algo": self.algo,
            "wall_ms": f"{self.wall_ms:.3f}",
            "sizes": ";".join(str(s) for s in self.sizes),
            "error_pct": "" if self.error_percent is None else f"{self.error_percent:.4f}",
            "status": self.status,
            "speedup": "" if self.speedup is None else f"{self.speedup:.3f}",
            "padded": "1" if self.padded else "0",
        }


def _timed(algo: str, g: Graph, params: TopKParams, budget_s: float | None,
           graph_name: str, flags: PruneFlags, workers: int) -> RunReport:
    stats = RunStats()
    deadline = None if budget_s is None else time.monotonic() + budget_s
    start = time.perf_counter()
    try:
        if algo == "kqc":
            result = kqc(g, params, flags=flags, workers=workers,
                         deadline=deadline, stats=stats)
        else:
            result = naive_qc(g, params.gamma, params.min_size, params.k,
                              flags=flags, deadline=deadline, stats=stats)
        status = "ok"
        sizes = tuple(len(s) for s in result)
    except SearchTimeout:
        status = "timeout"
        sizes = ()
    wall_ms = 1000.0 * (time.perf_counter() - start)
    return RunReport(graph=graph_name, params=params, algo=algo, sizes=sizes,
                     wall_ms=wall_ms, status=status,
                     kernel_count=stats.kernel_count,
                     expansion_count=stats.expansion_count,
                     peak_candidates=stats.peak_candidates)


def run_cell(g: Graph, params: TopKParams, budget_s: float | None = None, *,
             graph_name: str = "graph", flags: PruneFlags = PruneFlags(),
             workers: int = 1) -> tuple[RunReport, RunReport]:
    """Run the heuristic then the exact baseline on one cell; attach the
    error percentage and speedup to the heuristic row when both finish."""
    heur = _timed("kqc", g, params, budget_s, graph_name, flags, workers)
    exact = _timed("naive", g, params, budget_s, graph_name, flags, workers)
    if heur.status == "ok" and exact.status == "ok":
        if heur.sizes or exact.sizes:
            heur.error_percent = error_percent(heur.sizes, exact.sizes)
            _, _, heur.padded = pad_pair(heur.sizes, exact.sizes)
        else:
            heur.error_percent = 0.0
        if heur.wall_ms > 0:
            heur.speedup = exact.wall_ms / heur.wall_ms
    return heur, exact


def run_grid(g: Graph, grid: Iterable[TopKParams],
             budget_s: float | None = None, *, graph_name: str = "graph",
             flags: PruneFlags = PruneFlags(), workers: int = 1) -> list[RunReport]:
    """Run every parameter cell on ``g``; two reports (kqc, naive) per cell."""
    reports: list[RunReport] = []
    for params in grid:
        heur, exact = run_cell(g, params, budget_s, graph_name=graph_name,
                               flags=flags, workers=workers)
        reports.append(heur)
        reports.append(exact)
    return reports


def write_csv(reports: Sequence[RunReport], fp: IO[str]) -> None:
    writer = csv.DictWriter(fp, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        writer.writerow(report.csv_row())


# -- kernel density profiling ----------------------------------------------

@dataclass(frozen=True)
class ProfileRow:
    gamma_prime: Fraction
    size: int
    fraction: float
    samples: int


def kernel_profile(g: Graph, gamma: Fraction | str,
                   gamma_primes: Sequence[Fraction | str], sample_count: int,
                   min_size: int, *, rng: random.Random | None = None,
                   max_enumerate: int | None = None,
                   flags: PruneFlags = PruneFlags()) -> list[ProfileRow]:
    """For each gamma' and size s, the fraction of sampled gamma-quasi-cliques
    whose induced subgraph contains a gamma'-quasi-clique of size >= s.

    Samples are drawn uniformly from the enumerated collection (all of it when
    it is smaller than ``sample_count``); ``max_enumerate`` truncates the
    enumeration on graphs too large to sweep completely.
    """
    gamma = ensure_gamma(gamma)
    primes = [ensure_gamma(gp) for gp in gamma_primes]
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    rng = rng or random.Random()
    gen = enumerate_qcs(g, (), gamma, min_size, flags=flags)
    if max_enumerate is not None:
        gen = islice(gen, max_enumerate)
    population = list(gen)
    if not population:
        log.warning("no quasi-cliques of size >= %d at gamma=%s to profile",
                    min_size, gamma)
        return []
    if len(population) > sample_count:
        samples = rng.sample(population, sample_count)
    else:
        samples = population
    # Largest gamma'-quasi-clique inside each sample's induced subgraph.
    # A single vertex is always one, so the floor is 1.
    best: dict[int, list[int]] = {i: [] for i in range(len(primes))}
    for s in samples:
        sub = induced_subgraph(g, s)
        for i, gp in enumerate(primes):
            top = 1
            for q in enumerate_qcs(sub, (), gp, 2, flags=flags):
                if len(q) > top:
                    top = len(q)
            best[i].append(top)
    max_size = max(len(s) for s in samples)
    rows = []
    for i, gp in enumerate(primes):
        for size in range(1, max_size + 1):
            hits = sum(1 for b in best[i] if b >= size)
            rows.append(ProfileRow(gamma_prime=gp, size=size,
                                   fraction=hits / len(samples),
                                   samples=len(samples)))
    return rows


def profile_csv(rows: Sequence[ProfileRow], fp: IO[str]) -> None:
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(["gamma_prime", "size", "fraction", "samples"])
    for row in rows:
        writer.writerow([str(row.gamma_prime), row.size,
                         f"{row.fraction:.6f}", row.samples])
