"""Acceptance gate: one test per shipped guarantee, tolerances pinned below.

Each ``test_cNN_*`` function asserts one advertised behavior end to end on
frozen instance recipes.  Two ``xfail(strict=True)`` tests keep reference
figures that are arithmetically unattainable as stated (a ceiling identity
that fails at r=3 and one-decimal figures that are truncations, not
roundings) visible instead of weakening them; the green tests beside them
pin the corrected form of each claim.
"""
import csv
import io
import itertools
import json
import math
import random
import statistics
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from quasik.generate import gnp, planted_instance
from quasik.graph import Graph
from quasik.hardness import build_gadget, gadget_gamma, verify_gadget_theorem
from quasik.metrics import error_percent, soergel_distance
from quasik.oracle import enumerate_all_qcs_bruteforce, is_maximal_bruteforce
from quasik.qc import degree_threshold, is_quasi_clique
from quasik.search import SearchTimeout, enumerate_qcs
from quasik.topk import TopKParams, k_max, kqc, naive_qc

F = Fraction

# Pinned tolerances and budgets ------------------------------------------------
C1_WALL_BUDGET_S = 300.0       # advertised: full oracle sweep under 5 minutes
C4_WALL_BUDGET_S = 600.0       # advertised: maximality audit under 10 minutes
C6_ABS_TOL = 0.05              # advertised tolerance on the worked examples
C7_MEAN_ERROR_MAX = 5.0        # percent, aggregate mean over 50 instances
C7_NAIVE_DEADLINE_S = 60.0     # safety net; measured worst case is ~0.5s
C8A_NAIVE_BUDGET_S = 5.0       # per-run cap; a timeout scores its elapsed time
C8B_REPEATS = 5                # best-of-n wall clock per gamma
C8B_FACTOR = 1.15              # allowed step-to-step timing wobble
C8B_SLACK_S = 0.010

GAMMAS = [F(1, 2), F(3, 5), F(7, 10), F(4, 5), F(9, 10), F(1)]


def planted_suite():
    """The 50 frozen desk-scale instances: G(60, 0.08) + one planted clique
    of 8-12 vertices per instance."""
    out = []
    for seed in range(50):
        rng = random.Random(1000 + seed)
        size = rng.randint(8, 12)
        g, _ = planted_instance(60, 0.08, [size], rng)
        out.append(g)
    return out


# -- c1: enumeration equals the brute-force oracle -----------------------------

def test_c01_enumeration_matches_oracle_on_504_graphs():
    rng = random.Random(11)
    start = time.perf_counter()
    graphs = 0
    for _rep in range(9):
        for n in range(5, 13):
            for p in (0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8):
                g = gnp(n, p, rng)
                graphs += 1
                for gamma in GAMMAS:
                    for min_size in (2, 3, 5):
                        want = set(enumerate_all_qcs_bruteforce(g, gamma,
                                                                min_size))
                        got = list(enumerate_qcs(g, (), gamma, min_size))
                        assert len(got) == len(set(got)), "duplicate emission"
                        assert set(got) == want, (n, p, gamma, min_size)
    wall = time.perf_counter() - start
    assert graphs == 504
    assert wall < C1_WALL_BUDGET_S
    print(f"c1 PASS: 504 graphs x 18 configs, oracle-equal, {wall:.0f}s")


# -- c2: the 8-vertex fixture -------------------------------------------------

def test_c02_fixture_block_is_the_top_answer(fig2, fig2_block, fig2_sub):
    gamma = F(3, 5)
    assert is_quasi_clique(fig2, fig2_sub, gamma)
    assert not is_maximal_bruteforce(fig2, fig2_sub, gamma)
    assert is_quasi_clique(fig2, fig2_block, gamma)
    assert is_maximal_bruteforce(fig2, fig2_block, gamma)
    assert naive_qc(fig2, gamma, 5, 1) == [fig2_block]
    params = TopKParams(gamma=gamma, gamma_prime=F(4, 5), k=1, k_prime=3,
                        min_size=5)
    assert kqc(fig2, params) == [fig2_block]
    print("c2 PASS: fixture five-set non-maximal, six-block returned by both")


# -- c3: k_max against a brute-force reference --------------------------------

def brute_k_max(sets, k):
    uniq = set(sets)
    maximal = [s for s in uniq if not any(s < t for t in uniq)]
    maximal.sort(key=lambda s: (-len(s), tuple(sorted(s))))
    return maximal[:k]


def test_c03_kmax_matches_reference_on_1000_families():
    rng = random.Random(33)
    for _ in range(1000):
        n = rng.randint(1, 12)
        fam = [frozenset(rng.sample(range(n), rng.randint(1, min(n, 7))))
               for _ in range(rng.randint(0, 25))]
        k = rng.randint(1, 8)
        got = k_max(fam, k)
        assert got == brute_k_max(fam, k)
        assert len(got) <= k
        assert not any(a < b for a in got for b in got)  # antichain
    print("c3 PASS: 1000 random families, reference-equal antichains")


# -- c4: heuristic outputs are genuinely maximal -------------------------------

def test_c04_kqc_outputs_survive_maximality_audit():
    rng = random.Random(44)
    start = time.perf_counter()
    audited = 0
    for _ in range(200):
        n = rng.randint(8, 20)
        g = gnp(n, rng.choice([0.2, 0.35, 0.5]), rng)
        gamma = rng.choice([F(1, 2), F(3, 5), F(7, 10), F(4, 5)])
        k = rng.choice([3, 5])
        min_size = rng.choice([4, 5])
        params = TopKParams.with_defaults(gamma, k, min_size=min_size)
        out = kqc(g, params)
        assert len(out) <= k
        for s in out:
            audited += 1
            assert len(s) >= min_size
            assert is_maximal_bruteforce(g, s, gamma)
    wall = time.perf_counter() - start
    assert wall < C4_WALL_BUDGET_S
    print(f"c4 PASS: 200 graphs, {audited} outputs audited maximal, {wall:.0f}s")


# -- c5: hardness gadget biconditional -----------------------------------------

def test_c05_gadget_biconditional_exhaustive_and_random():
    checked = 0
    for n in range(1, 6):                      # every labeled graph, n <= 5
        pairs = list(itertools.combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            base = Graph(n, [pairs[i] for i in range(len(pairs))
                             if bits >> i & 1])
            for r in (2, 3):
                assert verify_gadget_theorem(build_gadget(base, r), base)
                checked += 1
    rng = random.Random(55)
    for _ in range(100):                       # random mid-size bases
        base = gnp(rng.randint(6, 8), rng.choice([0.2, 0.4, 0.6, 0.8]), rng)
        for r in (2, 3):
            assert verify_gadget_theorem(build_gadget(base, r), base)
            checked += 1
    assert checked == 2398
    print(f"c5 PASS: biconditional on {checked} gadget instances")


def test_c05_threshold_relations_corrected():
    """What the construction actually guarantees: at the gadget gamma the
    degree floor r^2+r-1 is exact for sets of 2r^2+2r vertices (and for
    2r^2+r+1 when r is 2 or 3), and an upper bound at 2r^2+r vertices."""
    for r in (2, 3, 4, 5):
        gamma = gadget_gamma(r)
        floor = r * r + r - 1
        assert gamma == F(r * r + r - 1, 2 * r * r + 2 * r - 1)
        assert degree_threshold(gamma, 2 * r * r + r) <= floor
        assert degree_threshold(gamma, 2 * r * r + 2 * r) == floor
    for r in (2, 3):
        assert degree_threshold(gadget_gamma(r), 2 * r * r + r + 1) == \
            r * r + r - 1
    print("c5 PASS: corrected threshold relations hold for r in 2..5")


@pytest.mark.xfail(strict=True, reason=(
    "stated identity degree_threshold(gamma_r, 2r^2+r) = r^2+r-1 fails at "
    "r=3: ceil(11*20/23) = 10, not 11"))
def test_c05_threshold_identity_as_stated():
    for r in (2, 3):
        assert degree_threshold(gadget_gamma(r), 2 * r * r + r) == \
            r * r + r - 1


# -- c6: worked error-metric examples ------------------------------------------

def test_c06_worked_examples_exact_and_truncated():
    cases = [
        ((10, 10, 9), (12, 10, 10), F(300, 32), 9.3),
        ((10, 10, 9, 9), (12, 10, 10, 9), F(300, 41), 7.3),
        ((10, 10, 9, 8), (12, 10, 10, 9), F(400, 41), 9.7),
    ]
    for h, z, exact, published in cases:
        got = soergel_distance(h, z)
        assert got == pytest.approx(float(exact), abs=1e-9)
        assert math.floor(got * 10) / 10 == published  # one-decimal truncation
        assert error_percent(h, z) == got
    # the middle example is the one where the stated +-0.05 also holds
    assert abs(soergel_distance((10, 10, 9, 9), (12, 10, 10, 9)) - 7.3) \
        <= C6_ABS_TOL
    print("c6 PASS: 9.375, 300/41, 400/41 exact; truncate to 9.3/7.3/9.7")


@pytest.mark.xfail(strict=True, reason=(
    "9.375 and 400/41=9.756... sit more than 0.05 from the one-decimal "
    "figures 9.3 and 9.7; those figures are truncations"))
def test_c06_rounding_tolerance_as_stated():
    assert abs(soergel_distance((10, 10, 9), (12, 10, 10)) - 9.3) <= C6_ABS_TOL
    assert abs(soergel_distance((10, 10, 9, 8), (12, 10, 10, 9)) - 9.7) \
        <= C6_ABS_TOL


# -- c7: heuristic accuracy on planted instances --------------------------------

def test_c07_mean_error_under_five_percent():
    params = TopKParams(gamma=F(4, 5), gamma_prime=F(1), k=10, k_prime=30,
                        min_size=5)
    errors = []
    for g in planted_suite():
        approx = kqc(g, params)
        exact = naive_qc(g, params.gamma, params.min_size, params.k,
                         deadline=time.monotonic() + C7_NAIVE_DEADLINE_S)
        if approx or exact:
            errors.append(error_percent([len(s) for s in approx],
                                        [len(s) for s in exact]))
        else:
            errors.append(0.0)
    mean = statistics.mean(errors)
    assert mean <= C7_MEAN_ERROR_MAX
    print(f"c7 PASS: mean error {mean:.3f}% over 50 planted instances")


# -- c8: speed trends ------------------------------------------------------------

def test_c08_heuristic_beats_exact_at_low_gamma():
    params = TopKParams(gamma=F(3, 5), gamma_prime=F(1), k=10, k_prime=30,
                        min_size=5)
    kqc_walls, naive_walls = [], []
    for g in planted_suite():
        t0 = time.perf_counter()
        kqc(g, params)
        kqc_walls.append(time.perf_counter() - t0)
        t0 = time.perf_counter()
        try:
            naive_qc(g, params.gamma, params.min_size, params.k,
                     deadline=time.monotonic() + C8A_NAIVE_BUDGET_S)
        except SearchTimeout:
            pass          # score the time it burned; a lower bound on finishing
        naive_walls.append(time.perf_counter() - t0)
    med_kqc = statistics.median(kqc_walls)
    med_naive = statistics.median(naive_walls)
    assert med_kqc < med_naive
    print(f"c8 PASS: median kqc {med_kqc * 1000:.0f}ms < "
          f"median naive {med_naive * 1000:.0f}ms")


def test_c08_enumeration_cost_falls_as_gamma_rises():
    g, _ = planted_instance(16, 0.6, [9], random.Random(77))
    sweep = [F(3, 5), F(7, 10), F(4, 5), F(9, 10), F(1)]
    counts, walls = [], []
    for gamma in sweep:
        best = math.inf
        count = 0
        for _ in range(C8B_REPEATS):
            t0 = time.perf_counter()
            count = sum(1 for _s in enumerate_qcs(g, (), gamma, 5))
            best = min(best, time.perf_counter() - t0)
        counts.append(count)
        walls.append(best)
    for a, b in zip(counts, counts[1:]):
        assert b <= a, f"count rose along {counts}"
    for a, b in zip(walls, walls[1:]):
        assert b <= a * C8B_FACTOR + C8B_SLACK_S, f"wall rose along {walls}"
    print(f"c8 PASS: counts {counts} non-increasing; "
          f"walls {[f'{w * 1000:.0f}ms' for w in walls]} non-increasing")


# -- c9: byte-identical reruns of every subcommand -------------------------------

def _run(args, cwd):
    proc = subprocess.run([sys.executable, "-m", "quasik", *args],
                          capture_output=True, text=True, timeout=300,
                          cwd=cwd)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout


def _canon_topk(raw):
    payload = json.loads(raw)
    payload.pop("wall_time_ms", None)           # the one timing field
    return json.dumps(payload, sort_keys=True)


def _canon_bench(raw):
    rows = list(csv.reader(io.StringIO(raw)))
    head = rows[0]
    wall, speed = head.index("wall_ms"), head.index("speedup")
    for row in rows[1:]:
        row[wall] = row[speed] = ""
    return rows


def test_c09_reruns_are_byte_identical(tmp_path, fig2_path):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"graphs": [str(fig2_path)], "gamma": ["0.6"],
                                "gamma_prime": ["0.8"], "k": [2],
                                "k_prime": [6], "min_size": [5]}))
    fixed = [
        ["--seed-rng", "7", "summary", "--graph", str(fig2_path)],
        ["--seed-rng", "7", "enumerate", "--graph", str(fig2_path),
         "--gamma", "0.6", "--min-size", "5"],
        ["--seed-rng", "7", "oracle", "--graph", str(fig2_path),
         "--gamma", "0.6", "--min-size", "5", "--k", "3"],
        ["--seed-rng", "7", "profile-kernels", "--graph", str(fig2_path),
         "--gamma", "0.6", "--gamma-primes", "0.8,1", "--samples", "4",
         "--min-size", "5"],
    ]
    for args in fixed:
        assert _run(args, tmp_path) == _run(args, tmp_path), args

    for algo in ("kqc", "naive"):
        args = ["--seed-rng", "7", "topk", "--algo", algo, "--graph",
                str(fig2_path), "--gamma", "0.6", "--k", "2"]
        assert _canon_topk(_run(args, tmp_path)) == \
            _canon_topk(_run(args, tmp_path)), args

    args = ["--seed-rng", "7", "bench", "--grid", str(grid)]
    assert _canon_bench(_run(args, tmp_path)) == \
        _canon_bench(_run(args, tmp_path)), args

    outputs = []
    for name in ("one", "two"):
        out = tmp_path / f"gadget-{name}.txt"
        base = tmp_path / "base.txt"
        base.write_text("0 1\n1 2\n0 2\n")
        _run(["--seed-rng", "7", "gadget", "--input", str(base),
              "--r", "2", "--out", str(out)], tmp_path)
        outputs.append(out.read_bytes() +
                       (tmp_path / f"gadget-{name}.txt.json").read_bytes())
    assert outputs[0] == outputs[1]
    print("c9 PASS: all seven subcommands rerun byte-identical")
