"""Command-line interface.

One executable with subcommands for loading/summarizing graphs, enumerating
quasi-cliques, the top-k searches, the brute-force oracle, the hardness
gadget, the benchmark grid, and kernel profiling.  Results go to stdout or
--out; diagnostics go to stderr.  Exit codes: 0 success, 1 user error,
2 internal error.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
import traceback
from contextlib import contextmanager
from pathlib import Path

from .bench import kernel_profile, profile_csv, run_grid, write_csv
from .graph import Graph, GraphFormatError, load_edge_list
from .hardness import build_gadget
from .oracle import enumerate_all_qcs_bruteforce, topk_bruteforce
from .qc import parse_gamma
from .search import enumerate_qcs
from .topk import RunStats, TopKParams, kqc, naive_qc, resolve_workers

log = logging.getLogger("quasik")


class CliError(Exception):
    """A user-facing input problem (exit code 1)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we want 1
        raise CliError(f"{self.prog}: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="quasik", description=__doc__)
    parser.add_argument("--config", metavar="FILE",
                        help="JSON file of default flag values, keyed by subcommand")
    parser.add_argument("--workers", type=int, default=None,
                        help="parallelism cap (default: QUASIK_WORKERS or cpu count)")
    parser.add_argument("--seed-rng", type=int, default=None, dest="seed_rng",
                        help="seed for all randomized sampling")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("summary", help="load a graph and print its summary")
    p.add_argument("--graph", help="edge-list file")
    p.add_argument("--out", "-o", default=None)

    p = sub.add_parser("enumerate", help="stream all quasi-cliques as JSONL")
    p.add_argument("--graph")
    p.add_argument("--gamma")
    p.add_argument("--min-size", type=int, default=None, dest="min_size")
    p.add_argument("--seed", default=None,
                   help="comma-separated vertex labels every output must contain")
    p.add_argument("--out", "-o", default=None)

    p = sub.add_parser("topk", help="k largest maximal quasi-cliques")
    p.add_argument("--algo", choices=["kqc", "naive"], default=None)
    p.add_argument("--graph")
    p.add_argument("--gamma")
    p.add_argument("--gamma-prime", default=None, dest="gamma_prime")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--k-prime", type=int, default=None, dest="k_prime")
    p.add_argument("--min-size", type=int, default=None, dest="min_size")
    p.add_argument("--out", "-o", default=None)

    p = sub.add_parser("oracle", help="brute-force reference answers (small graphs)")
    p.add_argument("--graph")
    p.add_argument("--gamma")
    p.add_argument("--min-size", type=int, default=None, dest="min_size")
    p.add_argument("--k", type=int, default=None,
                   help="when given, report the k largest maximal sets instead of all")
    p.add_argument("--out", "-o", default=None)

    p = sub.add_parser("gadget", help="build the clique-hardness gadget graph")
    p.add_argument("--input", help="base graph edge-list file")
    p.add_argument("--r", type=int, default=None, help="clique size parameter")
    p.add_argument("--out", help="edge-list output path; a .json sidecar is written next to it")

    p = sub.add_parser("bench", help="timed heuristic-vs-exact parameter grid")
    p.add_argument("--grid", help="JSON grid spec file")
    p.add_argument("--budget-secs", type=float, default=None, dest="budget_secs")
    p.add_argument("--out", "-o", default=None)

    p = sub.add_parser("profile-kernels",
                       help="fraction of quasi-cliques containing denser kernels")
    p.add_argument("--graph")
    p.add_argument("--gamma")
    p.add_argument("--gamma-primes", default=None, dest="gamma_primes",
                   help="comma-separated list, e.g. 0.85,0.9,1.0")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--min-size", type=int, default=None, dest="min_size")
    p.add_argument("--max-enumerate", type=int, default=None, dest="max_enumerate")
    p.add_argument("--out", "-o", default=None)
    return parser


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fp:
            config = json.load(fp)
    except FileNotFoundError:
        raise CliError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise CliError(f"config file is not valid JSON: {exc}")
    if not isinstance(config, dict):
        raise CliError("config file must hold a JSON object")
    return config


def _get(args, config: dict, key: str, default=None, required: bool = False):
    """CLI flag if given, else config [subcommand] then [global], else default."""
    value = getattr(args, key, None)
    if value is None:
        for section in (args.command, "global"):
            sect = config.get(section)
            if isinstance(sect, dict) and key in sect:
                value = sect[key]
                break
    if value is None:
        value = default
    if value is None and required:
        raise CliError(f"missing required option --{key.replace('_', '-')} "
                       f"for '{args.command}'")
    return value


def _load_graph(path) -> Graph:
    if path is None:
        raise CliError("missing required option --graph")
    try:
        return load_edge_list(path)
    except FileNotFoundError:
        raise CliError(f"graph file not found: {path}")
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}")


@contextmanager
def _out_stream(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fp:
            yield fp


def _qc_json(g: Graph, s) -> dict:
    ids = sorted(s)
    return {"vertices": [g.labels[v] for v in ids], "size": len(ids)}


# -- subcommand handlers ----------------------------------------------------

def _cmd_summary(args, config) -> int:
    g = _load_graph(_get(args, config, "graph", required=True))
    with _out_stream(_get(args, config, "out")) as fp:
        json.dump(g.summary(), fp, indent=2)
        fp.write("\n")
    return 0


def _cmd_enumerate(args, config) -> int:
    g = _load_graph(_get(args, config, "graph", required=True))
    gamma = parse_gamma(_get(args, config, "gamma", required=True))
    min_size = int(_get(args, config, "min_size", default=2))
    seed_arg = _get(args, config, "seed")
    if seed_arg:
        try:
            seed = g.ids_of(x.strip() for x in str(seed_arg).split(",") if x.strip())
        except KeyError as exc:
            raise CliError(str(exc))
    else:
        seed = frozenset()
    with _out_stream(_get(args, config, "out")) as fp:
        for s in enumerate_qcs(g, seed, gamma, min_size):
            fp.write(json.dumps(_qc_json(g, s)))
            fp.write("\n")
    return 0


def _cmd_topk(args, config) -> int:
    g = _load_graph(_get(args, config, "graph", required=True))
    algo = _get(args, config, "algo", default="kqc")
    gamma = parse_gamma(_get(args, config, "gamma", required=True))
    k = int(_get(args, config, "k", required=True))
    min_size = int(_get(args, config, "min_size", default=5))
    gamma_prime = _get(args, config, "gamma_prime")
    k_prime = _get(args, config, "k_prime")
    stats = RunStats()
    start = time.perf_counter()
    if algo == "naive":
        params_json = {"gamma": str(gamma), "k": k, "min_size": min_size}
        result = naive_qc(g, gamma, min_size, k, stats=stats)
    else:
        params = TopKParams.with_defaults(
            gamma, k,
            gamma_prime=parse_gamma(gamma_prime) if gamma_prime is not None else None,
            k_prime=int(k_prime) if k_prime is not None else None,
            min_size=min_size)
        params_json = {"gamma": str(params.gamma),
                       "gamma_prime": str(params.gamma_prime),
                       "k": params.k, "k_prime": params.k_prime,
                       "min_size": params.min_size}
        workers = resolve_workers(args.workers)
        result = kqc(g, params, workers=workers, stats=stats)
    wall_ms = 1000.0 * (time.perf_counter() - start)
    payload = {
        "algo": algo,
        "params": params_json,
        "sizes": [len(s) for s in result],
        "quasi_cliques": [_qc_json(g, s) for s in result],
        "wall_time_ms": round(wall_ms, 3),
        "kernel_count": stats.kernel_count,
        "expansion_count": stats.expansion_count,
    }
    with _out_stream(_get(args, config, "out")) as fp:
        json.dump(payload, fp, indent=2)
        fp.write("\n")
    return 0


def _cmd_oracle(args, config) -> int:
    g = _load_graph(_get(args, config, "graph", required=True))
    gamma = parse_gamma(_get(args, config, "gamma", required=True))
    min_size = int(_get(args, config, "min_size", default=2))
    k = _get(args, config, "k")
    if k is not None:
        sets = topk_bruteforce(g, gamma, min_size, int(k))
        mode = "topk"
    else:
        sets = enumerate_all_qcs_bruteforce(g, gamma, min_size)
        mode = "all"
    payload = {
        "mode": mode,
        "gamma": str(gamma),
        "min_size": min_size,
        "count": len(sets),
        "sizes": [len(s) for s in sets],
        "quasi_cliques": [_qc_json(g, s) for s in sets],
    }
    with _out_stream(_get(args, config, "out")) as fp:
        json.dump(payload, fp, indent=2)
        fp.write("\n")
    return 0


def _cmd_gadget(args, config) -> int:
    g_prime = _load_graph(_get(args, config, "input", required=True))
    r = _get(args, config, "r", required=True)
    out = _get(args, config, "out", required=True)
    instance = build_gadget(g_prime, int(r))
    out_path = Path(out)
    with open(out_path, "w", encoding="utf-8") as fp:
        instance.graph.write_edge_list(fp)
    sidecar = {
        "gamma": str(instance.gamma),
        "r": instance.r,
        "n": instance.graph.n,
        "m": instance.graph.m,
        "x": instance.graph.labels_of(instance.x),
    }
    sidecar_path = out_path.with_name(out_path.name + ".json")
    with open(sidecar_path, "w", encoding="utf-8") as fp:
        json.dump(sidecar, fp, indent=2)
        fp.write("\n")
    log.info("wrote %s and %s", out_path, sidecar_path)
    return 0


def _grid_cells(spec: dict) -> list[TopKParams]:
    def listed(key, default):
        value = spec.get(key, default)
        return value if isinstance(value, list) else [value]

    cells = []
    for gamma in listed("gamma", None):
        if gamma is None:
            raise CliError("grid spec needs a 'gamma' list")
        for k in listed("k", 10):
            for min_size in listed("min_size", 5):
                for gp in listed("gamma_prime", None):
                    for kp in listed("k_prime", None):
                        cells.append(TopKParams.with_defaults(
                            parse_gamma(str(gamma)), int(k),
                            gamma_prime=parse_gamma(str(gp)) if gp is not None else None,
                            k_prime=int(kp) if kp is not None else None,
                            min_size=int(min_size)))
    return cells


def _cmd_bench(args, config) -> int:
    grid_path = _get(args, config, "grid", required=True)
    try:
        with open(grid_path, "r", encoding="utf-8") as fp:
            spec = json.load(fp)
    except FileNotFoundError:
        raise CliError(f"grid spec not found: {grid_path}")
    except json.JSONDecodeError as exc:
        raise CliError(f"grid spec is not valid JSON: {exc}")
    graphs = spec.get("graphs")
    if not graphs or not isinstance(graphs, list):
        raise CliError("grid spec needs a nonempty 'graphs' list")
    cells = _grid_cells(spec)
    budget = _get(args, config, "budget_secs")
    workers = resolve_workers(args.workers)
    reports = []
    base = Path(grid_path).parent
    for name in graphs:
        path = Path(name)
        if not path.is_absolute() and not path.exists():
            path = base / name
        g = _load_graph(path)
        reports.extend(run_grid(g, cells,
                                None if budget is None else float(budget),
                                graph_name=str(name), workers=workers))
    with _out_stream(_get(args, config, "out")) as fp:
        write_csv(reports, fp)
    return 0


def _cmd_profile(args, config) -> int:
    g = _load_graph(_get(args, config, "graph", required=True))
    gamma = parse_gamma(_get(args, config, "gamma", required=True))
    primes_arg = _get(args, config, "gamma_primes", required=True)
    primes = [parse_gamma(x.strip()) for x in str(primes_arg).split(",") if x.strip()]
    if not primes:
        raise CliError("--gamma-primes needs at least one value")
    samples = int(_get(args, config, "samples", default=100))
    min_size = int(_get(args, config, "min_size", default=5))
    max_enum = _get(args, config, "max_enumerate")
    rng = random.Random(args.seed_rng)
    rows = kernel_profile(g, gamma, primes, samples, min_size, rng=rng,
                          max_enumerate=None if max_enum is None else int(max_enum))
    with _out_stream(_get(args, config, "out")) as fp:
        profile_csv(rows, fp)
    return 0


_HANDLERS = {
    "summary": _cmd_summary,
    "enumerate": _cmd_enumerate,
    "topk": _cmd_topk,
    "oracle": _cmd_oracle,
    "gadget": _cmd_gadget,
    "bench": _cmd_bench,
    "profile-kernels": _cmd_profile,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(stream=sys.stderr,
                            level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(message)s")
        if not args.command:
            parser.print_usage(sys.stderr)
            print("quasik: a subcommand is required", file=sys.stderr)
            return 1
        config = _load_config(args.config)
        return _HANDLERS[args.command](args, config)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphFormatError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 2
    except Exception:
        traceback.print_exc()
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
