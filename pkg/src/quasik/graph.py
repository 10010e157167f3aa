"""Simple undirected graphs: edge-list loading, induced subgraphs, connectivity.

Vertices are dense integer ids 0..n-1; original edge-list labels are kept in a
two-way mapping.  For small graphs (n <= BITSET_MAX_N) adjacency is also
materialized as one Python-int bitset row per vertex, which the mining code
uses for fast membership / intersection / popcount work.
"""

from __future__ import annotations

from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence

# A (candidate) quasi-clique is just a set of vertex ids.
VertexSet = frozenset[int]

# Above this vertex count bitset rows are skipped (they cost n*n/8 bytes) and
# set-based fallbacks are used instead.
BITSET_MAX_N = 4096


class GraphFormatError(ValueError):
    """Unusable edge-list input; carries the offending 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class Graph:
    """Immutable simple undirected graph.

    Self-loops and duplicate/reversed duplicate edges passed to the
    constructor are dropped, so ``m`` always counts unique undirected edges.
    """

    __slots__ = ("n", "m", "neighbors", "adj_sets", "adj_bits", "labels",
                 "_id_by_label", "source_ids")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Sequence[str] | None = None,
                 source_ids: tuple[int, ...] | None = None):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v or v in adj[u]:
                continue
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self.neighbors = tuple(tuple(sorted(s)) for s in adj)
        self.adj_sets = tuple(frozenset(s) for s in adj)
        if n <= BITSET_MAX_N:
            rows = []
            for s in adj:
                row = 0
                for v in s:
                    row |= 1 << v
                rows.append(row)
            self.adj_bits: tuple[int, ...] | None = tuple(rows)
        else:
            self.adj_bits = None
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValueError("labels length must equal n")
        self._id_by_label = {lab: i for i, lab in enumerate(labels)}
        if len(self._id_by_label) != n:
            raise ValueError("vertex labels must be unique")
        self.labels = labels
        self.source_ids = source_ids

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.neighbors[u]:
                if u < v:
                    yield (u, v)

    def max_degree(self) -> int:
        return max((len(t) for t in self.neighbors), default=0)

    def avg_degree(self) -> float:
        return 2.0 * self.m / self.n if self.n else 0.0

    def summary(self) -> dict:
        return {"n": self.n, "m": self.m, "max_degree": self.max_degree(),
                "avg_degree": self.avg_degree()}

    # -- label mapping ----------------------------------------------------

    def id_of(self, label: str) -> int:
        try:
            return self._id_by_label[str(label)]
        except KeyError:
            raise KeyError(f"unknown vertex label {label!r}") from None

    def label_of(self, v: int) -> str:
        return self.labels[v]

    def ids_of(self, labels: Iterable[str]) -> frozenset[int]:
        return frozenset(self.id_of(x) for x in labels)

    def labels_of(self, ids: Iterable[int]) -> list[str]:
        # sorted by id so the output is reproducible
        return [self.labels[v] for v in sorted(ids)]

    # -- output -----------------------------------------------------------

    def write_edge_list(self, fp: IO[str]) -> None:
        for u, v in self.edges():
            fp.write(f"{self.labels[u]} {self.labels[v]}\n")


def load_edge_list(source: str | Path | IO | Iterable[str]) -> Graph:
    """Parse KONECT/SNAP-style edge-list text into a simplified Graph.

    Lines starting with ``%`` or ``#`` and blank lines are skipped.  Each data
    line holds two whitespace-separated endpoint labels; trailing tokens
    (weights, timestamps) are ignored.  Directed inputs are simplified: both
    orientations of a pair merge into one undirected edge; self-loops and
    duplicates are dropped.  Labels map to dense ids 0..n-1 in first-seen
    order.
    """
    close_after = False
    if isinstance(source, (str, Path)):
        lines: Iterable = open(source, "r", encoding="utf-8")
        close_after = True
    else:
        lines = source
    ids: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    try:
        for line_no, raw in enumerate(lines, start=1):
            if isinstance(raw, bytes):
                raw = raw.decode("utf-8")
            line = raw.strip()
            if not line or line.startswith("%") or line.startswith("#"):
                continue
            tokens = line.split()
            if len(tokens) < 2:
                raise GraphFormatError(
                    f"expected two endpoint labels, got {line!r}", line_no)
            u_lab, v_lab = tokens[0], tokens[1]
            for lab in (u_lab, v_lab):
                if lab not in ids:
                    ids[lab] = len(ids)
            edges.append((ids[u_lab], ids[v_lab]))
    finally:
        if close_after:
            lines.close()
    if not edges:
        raise GraphFormatError("empty input: no edges found")
    labels = [None] * len(ids)
    for lab, i in ids.items():
        labels[i] = lab
    return Graph(len(ids), edges, labels=labels)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by vertex set ``s``, relabelled to dense local ids.

    The returned graph keeps the original labels, and ``source_ids[i]`` maps
    local id i back to the id in ``g``.
    """
    members = sorted(set(s))
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex id {v} out of range")
    local = {v: i for i, v in enumerate(members)}
    edges = []
    for v in members:
        for w in g.neighbors[v]:
            if v < w and w in local:
                edges.append((local[v], local[w]))
    return Graph(len(members), edges,
                 labels=[g.labels[v] for v in members],
                 source_ids=tuple(members))


def is_connected(g: Graph, s: Iterable[int]) -> bool:
    """True iff the subgraph induced by ``s`` is connected (empty -> True)."""
    members = set(s)
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex id {v} out of range")
    if len(members) <= 1:
        return True
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adj_sets[v]:
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


# -- bitmask helpers (shared by the mining and oracle code) ----------------

def mask_of(ids: Iterable[int]) -> int:
    mask = 0
    for v in ids:
        mask |= 1 << v
    return mask


def ids_of_mask(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of_mask(mask: int) -> VertexSet:
    return frozenset(ids_of_mask(mask))


def connected_mask(rows: Sequence[int], mask: int) -> bool:
    """Connectivity of the subgraph induced by ``mask`` over bitset rows."""
    if mask == 0:
        return True
    reached = mask & -mask
    frontier = reached
    while frontier:
        grow = 0
        m = frontier
        while m:
            low = m & -m
            grow |= rows[low.bit_length() - 1]
            m ^= low
        frontier = grow & mask & ~reached
        reached |= frontier
    return reached == mask
