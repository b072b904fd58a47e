"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
"""
import random
import sys
import time
from itertools import combinations

import pytest

from octagvc.bipartite import max_matching, min_vertex_cover
from octagvc.cli import run_solve
from octagvc.compression import CompressionStats, disjoint_compression, solve_oct
from octagvc.doubling import doubled_graph, is_vertex_cover
from octagvc.graph import Bipartition, from_edge_list, is_bipartite, is_oct, two_coloring
from octagvc.io import Instance
from octagvc.oracle import (
    GenSpec,
    brute_disjoint,
    brute_min_oct,
    brute_min_vc,
    brute_oct,
    complete_graph,
    cycle_graph,
    petersen_graph,
    random_graph,
)

PROBABILITIES = (0.2, 0.4, 0.6)
PERF_LIMIT_SECONDS = 60.0


# printed by the terminal-summary hook in conftest.py
RESULTS: list[str] = []


def report(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    RESULTS.append(line)
    assert ok, line


def _corpus(count_per_p, max_n, base_seed):
    for i in range(count_per_p):
        for j, p in enumerate(PROBABILITIES):
            n = 4 + i % (max_n - 3)
            yield random_graph(GenSpec(n=n, edge_probability=p, seed=base_seed + 3 * i + j))


@pytest.fixture(scope="module")
def decision_runs():
    """Criterion 1's runs, shared with criterion 4: (graph, k, result, stats, expected)."""
    runs = []
    for g in _corpus(100, 10, 1000):
        optimum = len(brute_min_oct(g))
        for k in range(g.n + 1):
            stats = CompressionStats()
            result = solve_oct(g, k, stats=stats)
            runs.append((g, k, result, stats, optimum <= k))
    return runs


def test_c1_oracle_equivalence(decision_runs):
    graphs = {id(g) for g, *_ in decision_runs}
    bad = 0
    for g, k, result, _, expected in decision_runs:
        if (result is not None) != expected:
            bad += 1
        elif result is not None and (len(result) > k or not is_oct(g, result)):
            bad += 1
    # spot-check the shortcut above against the oracle's own decision form
    for g, k, _, _, expected in decision_runs[::37]:
        assert (brute_oct(g, k) is not None) == expected
    report(1, bad == 0 and len(graphs) >= 300,
           f"{len(graphs)} graphs, {len(decision_runs)} (g, k) decisions, {bad} disagreements")


def test_c2_lemma_identity():
    bad = 0
    total = 0
    for i in range(120):
        n = 3 + i % 7
        g = random_graph(GenSpec(n=n, edge_probability=PROBABILITIES[i % 3], seed=5000 + i))
        total += 1
        if len(brute_min_vc(doubled_graph(g).graph)) != n + len(brute_min_oct(g)):
            bad += 1
    report(2, bad == 0 and total >= 100, f"{total} graphs (n <= 9), {bad} violations of minVC(G2) = n + OCT")


def _random_t(g, rng):
    # an OCT with g[t] bipartite, of size between the optimum and optimum + 2
    optimum = len(brute_min_oct(g))
    size = min(g.n, optimum + rng.choice((0, 1, 1, 2)))
    candidates = [
        frozenset(c)
        for c in combinations(range(g.n), size)
        if is_oct(g, c) and is_bipartite(g, set(range(g.n)) - set(c))
    ]
    return rng.choice(candidates) if candidates else None


def test_c3_disjoint_equivalence():
    rng = random.Random(7)
    instances = yes = bad = 0
    seed = 9000
    while instances < 320:
        seed += 1
        n = 4 + seed % 7
        g = random_graph(GenSpec(n=n, edge_probability=PROBABILITIES[seed % 3], seed=seed))
        t = _random_t(g, rng)
        if t is None or not t:
            continue
        instances += 1
        res = disjoint_compression(g, t)
        expected = brute_disjoint(g, t)
        if res.found != (expected is not None) or res.degenerate:
            bad += 1
            continue
        if res.found:
            yes += 1
            x = res.cover
            ok = (
                not res.oct & t
                and len(res.oct) <= len(t) - 1
                and is_oct(g, res.oct)
                and is_vertex_cover(doubled_graph(g).graph, x)
                and all((v in x) != (v + g.n in x) for v in t)
            )
            bad += not ok
    report(3, bad == 0, f"{instances} (h, t) instances ({yes} YES, {instances - yes} NO), {bad} disagreements")


def test_c4_work_bounds(decision_runs):
    compress_calls = disjoint_calls = violations = 0
    for *_, stats, _ in decision_runs:
        for size, work in stats.compress_log:
            compress_calls += 1
            violations += work > 3 ** size
        for size, work in stats.disjoint_log:
            disjoint_calls += 1
            violations += work > 2 ** size
    report(4, violations == 0 and compress_calls > 0,
           f"{compress_calls} compress calls, {disjoint_calls} disjoint calls, {violations} bound violations")


def test_c5_closed_families():
    failures = []
    for n in range(1, 9):
        g = complete_graph(n)
        for k in range(n + 1):
            if (solve_oct(g, k) is not None) != (k >= n - 2):
                failures.append(f"K{n} k={k}")
    for n in range(3, 16):
        c = cycle_graph(n)
        if n % 2 == 0:
            if solve_oct(c, 0) != frozenset():
                failures.append(f"C{n} k=0")
        else:
            if solve_oct(c, 0) is not None or solve_oct(c, 1) is None:
                failures.append(f"C{n}")
    p = petersen_graph()
    # oracle value, computed independently over all <= 3-subsets
    assert brute_oct(p, 2) is None and brute_oct(p, 3) is not None
    if solve_oct(p, 2) is not None or solve_oct(p, 3) is None:
        failures.append("Petersen")
    report(5, not failures, "K_n (n<=8), even/odd cycles, Petersen" + (f": {failures}" if failures else ""))


def test_c6_konig():
    bad = 0
    for i in range(520):
        rng = random.Random(20000 + i)
        n = 1 + i % 12
        side = [rng.random() < 0.5 for _ in range(n)]
        p = rng.choice(PROBABILITIES + (0.8,))
        pairs = [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v] and rng.random() < p]
        g = from_edge_list(n, pairs)
        pq = two_coloring(g)
        matching = max_matching(g, pq)
        cover = min_vertex_cover(g, pq)
        used = [v for e in matching for v in e]
        ok = (
            isinstance(pq, Bipartition)
            and len(used) == len(set(used))
            and matching <= g.edges
            and all(u in cover or v in cover for u, v in g.edges)
            and len(cover) == len(matching) == len(brute_min_vc(g))
        )
        bad += not ok
    report(6, bad == 0, f"520 random bipartite graphs (n <= 12), {bad} failures")


def test_c7_determinism():
    mismatches = 0
    cases = 0
    for seed in range(4):
        g = random_graph(GenSpec(n=30, planted_oct=4, edge_count=75, seed=seed))
        inst = Instance(g, tuple(str(v + 1) for v in range(g.n)))
        for k in (3, 4):
            texts = []
            for _ in range(2):
                rep = run_solve(inst, k)
                rep.elapsed = 0.0
                texts.append(rep.to_json() + "\n" + "\n".join(rep.lines(with_stats=True)))
            cases += 1
            mismatches += texts[0] != texts[1]
    report(7, mismatches == 0, f"{cases} repeated deterministic runs, {mismatches} differing reports")


def test_c8_performance():
    g = random_graph(GenSpec(n=60, planted_oct=8, edge_count=180, seed=0))
    start = time.perf_counter()
    result = solve_oct(g, 8)
    elapsed = time.perf_counter() - start
    ok = result is not None and len(result) <= 8 and is_oct(g, result) and elapsed < PERF_LIMIT_SECONDS
    report(8, ok, f"n=60 m={g.m} planted=8 k=8 solved in {elapsed:.2f}s (limit {PERF_LIMIT_SECONDS:.0f}s)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
