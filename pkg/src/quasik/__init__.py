"""quasik: mining the k largest maximal degree-based quasi-cliques.

A gamma-quasi-clique is a connected vertex-induced subgraph in which every
vertex has internal degree >= ceil(gamma * (size - 1)).  The package provides
an exact enumerator and top-k baseline, a kernel-expansion heuristic, slow
brute-force oracles for testing, a clique-hardness reduction gadget, accuracy
metrics, and a benchmark harness, plus a CLI (``quasik``).
"""

from .bench import ProfileRow, RunReport, kernel_profile, run_cell, run_grid, write_csv
from .generate import gnp, planted_instance
from .graph import (BITSET_MAX_N, Graph, GraphFormatError, VertexSet,
                    induced_subgraph, is_connected, load_edge_list)
from .hardness import GadgetInstance, build_gadget, gadget_gamma, verify_gadget_theorem
from .metrics import error_percent, pad_pair, soergel_distance
from .oracle import (enumerate_all_qcs_bruteforce, has_clique_bruteforce,
                     is_maximal_bruteforce, topk_bruteforce)
from .qc import (Gamma, QuasiCliqueRecord, degree_threshold, ensure_gamma,
                 is_quasi_clique, is_quasi_clique_mask, min_internal_degree,
                 parse_gamma)
from .search import (PruneFlags, SearchNode, SearchTimeout, candidate_frontier,
                     enumerate_qcs)
from .topk import RunStats, TopKParams, k_max, kqc, naive_qc, resolve_workers

__version__ = "0.1.0"

__all__ = [
    "BITSET_MAX_N", "GadgetInstance", "Gamma", "Graph", "GraphFormatError",
    "ProfileRow", "PruneFlags", "QuasiCliqueRecord", "RunReport", "RunStats",
    "SearchNode", "SearchTimeout", "TopKParams", "VertexSet",
    "build_gadget", "candidate_frontier", "degree_threshold", "ensure_gamma",
    "enumerate_all_qcs_bruteforce", "enumerate_qcs", "error_percent",
    "gadget_gamma", "gnp", "has_clique_bruteforce", "induced_subgraph",
    "is_connected", "is_maximal_bruteforce", "is_quasi_clique",
    "is_quasi_clique_mask", "k_max", "kernel_profile", "kqc",
    "load_edge_list", "min_internal_degree", "naive_qc", "pad_pair",
    "parse_gamma", "planted_instance", "resolve_workers", "run_cell",
    "run_grid", "soergel_distance", "topk_bruteforce",
    "verify_gadget_theorem", "write_csv",
]
