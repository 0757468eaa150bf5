"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are also repeated in the terminal summary (see conftest).
Set COLGRAPH_SOAK=1 to add the n=40000 complete-graph construction, and
COLGRAPH_ACCEPT_REPS to shorten the scaling runs while developing (the
criterion itself is defined at 5 repetitions).
"""

import contextlib
import math
import os
import random
import time
from pathlib import Path

import numpy as np

from colgraph import KINDS
from colgraph import generators as gen
from colgraph.algorithms import bellman_ford, dijkstra, edmonds_karp, hopcroft_karp, kruskal, maximal_cliques, prim
from colgraph.bench import experiments as ex
from colgraph.bench.harness import BenchParams, measure, scaling_exponent
from colgraph.core.memory import estimate_memory
from colgraph.io import from_text, load, structurally_equal, to_text
from colgraph.traversal import bfs, dfs

import instances
import oracles
from conftest import env_int
from scripts import KIND_NAMES, run_script

RESULTS = []


@contextlib.contextmanager
def criterion(number, title):
    t0 = time.perf_counter()
    info = []
    try:
        yield info
    except BaseException as exc:
        line = f"FAIL {number}. {title} ({time.perf_counter() - t0:.1f} s): {type(exc).__name__}: {exc}"
        RESULTS.append(line)
        print(line)
        raise
    extra = f"; {'; '.join(info)}" if info else ""
    line = f"PASS {number}. {title} ({time.perf_counter() - t0:.1f} s){extra}"
    RESULTS.append(line)
    print(line)


def _weight_all(g, w=1.5):
    for e in list(g.edges()):
        g.set_edge_weight(e.source, e.target, w)


def test_1_memory_model():
    with criterion(1, "memory model formulas") as info:
        t0 = time.perf_counter()
        cases = 0
        for n in (1, 2, 5, 10, 17, 40, 64):
            top = n * (n - 1) // 2
            for m in sorted({0, 1, n, top // 3, top // 2, top}):
                if m > top:
                    continue
                g = gen.gnm(n, m, seed=n + m)
                assert estimate_memory(g).total == 16 * n + 16 * m
                d = gen.random_digraph_gnm(n, m, seed=n * m + 1)
                assert estimate_memory(d).total == 24 * n + 12 * m
                if m:
                    # the weight column only exists once some edge carries a weight
                    _weight_all(g)
                    assert estimate_memory(g).total == 20 * n + 32 * m
                    _weight_all(d)
                    assert estimate_memory(d).total == 28 * n + 20 * m
                cases += 1
        elapsed = time.perf_counter() - t0
        assert elapsed < 1.0, f"{elapsed:.2f} s"
        info.append(f"{cases} (n, m) pairs x 4 layouts")


def test_2_edge_count_milestones():
    with criterion(2, "complete(5000) edge count and build time") as info:
        t0 = time.perf_counter()
        g = gen.complete(5000)
        elapsed = time.perf_counter() - t0
        assert g.num_edges == 12_497_500
        assert elapsed < 10.0, f"{elapsed:.2f} s"
        info.append(f"build {elapsed:.2f} s")
        del g
        if os.environ.get("COLGRAPH_SOAK"):
            t0 = time.perf_counter()
            big = gen.complete(40_000)
            assert big.num_edges == 799_980_000
            info.append(f"soak n=40000 in {time.perf_counter() - t0:.1f} s")
        else:
            info.append("n=40000 soak not requested")


def test_3_mirror_invariant_fuzz():
    with criterion(3, "mutation-script fuzz, all kinds") as info:
        scripts = env_int("COLGRAPH_FUZZ_SCRIPTS", 10_000)
        assert scripts >= 10_000, "the criterion needs at least 10^4 scripts"
        per_kind = dict.fromkeys(KIND_NAMES, 0)
        for seed in range(scripts):
            kind = KIND_NAMES[seed % len(KIND_NAMES)]
            run_script(1_000_000 + seed, kind_name=kind, max_n=50)
            per_kind[kind] += 1
        info.append(f"{scripts} scripts, {min(per_kind.values())}+ per kind")


def test_4_oracle_equivalence():
    with criterion(4, "oracle equivalence suite") as info:
        t0 = time.perf_counter()
        r = random.Random(4004)
        count = 500
        for _ in range(count):
            g, n, arcs = instances.weighted_digraph(r, max_n=16)
            ref = oracles.floyd_warshall(n, arcs)
            s = r.randrange(n)
            for res in (dijkstra(g, s), dijkstra(g, s, "array"), bellman_ford(g, s)):
                assert np.allclose(res.dist, ref[s], rtol=0, atol=1e-9)
            g, n, arcs = instances.weighted_digraph(r, max_n=16, negative=True)
            ref = oracles.floyd_warshall(n, arcs)
            s = r.randrange(n)
            res = bellman_ford(g, s)
            assert res.negative_cycle is None
            assert np.allclose(res.dist, ref[s], rtol=0, atol=1e-9)
        for _ in range(count):
            g, n, arcs, s, t = instances.capacity_network(r, max_n=10)
            assert edmonds_karp(g, s, t).value == oracles.min_cut_value(n, arcs, s, t)
        for _ in range(count):
            g, n, edges = instances.bipartite(r, max_n=12)
            assert hopcroft_karp(g).size == oracles.max_matching_size(n, edges)
        for _ in range(count):
            g, n, edges = instances.weighted_graph(r, max_n=8)
            ref = oracles.min_spanning_forest_weight(n, edges)
            assert math.isclose(prim(g).weight, ref, rel_tol=0, abs_tol=1e-9)
            assert math.isclose(kruskal(g).weight, ref, rel_tol=0, abs_tol=1e-9)
        for _ in range(count):
            g, n, edges = instances.simple_graph(r, max_n=10)
            assert {frozenset(c) for c in maximal_cliques(g)} == oracles.maximal_cliques(n, edges)
        elapsed = time.perf_counter() - t0
        assert elapsed < 60.0, f"{elapsed:.1f} s"
        info.append(f"{count} instances per family")


def _check_forest(g, nodes):
    assert sorted(x.vertex for x in nodes) == sorted(g.vertices())
    for x in nodes:
        if x.parent is None:
            assert x.level == 0
        else:
            assert g.contains_edge(x.parent.vertex, x.vertex)
            assert x.level == x.parent.level + 1
            assert x.parent.order < x.order


def test_5_traversal_correctness():
    with criterion(5, "BFS levels and traversal forests") as info:
        r = random.Random(5005)
        for _ in range(200):
            g = gen.gnp(32, 0.2, seed=r.randrange(10**9))
            s = r.randrange(32)
            hops = oracles.bfs_hops(32, {v: g.neighbors(v) for v in g.vertices()}, s)
            nodes = list(bfs(g, s))
            _check_forest(g, nodes)
            for x in nodes:
                if x.component == 0:
                    assert x.level == hops[x.vertex]
                else:
                    assert hops[x.vertex] == math.inf
            _check_forest(g, list(dfs(g, s)))
        info.append("200 Gnp(32, 0.2) graphs")


def test_6_operation_counters():
    with criterion(6, "O(1) probes and cell moves") as info:
        n = 200
        g = gen.complete(n)
        worst = 0
        for v in range(n):
            assert g.has_bitset(v)
            for u in range(0, n, 7):
                g.stats.reset()
                assert g.contains_edge(v, u) == (v != u)
                worst = max(worst, g.stats.probes)
        assert worst <= 3
        moves = 0
        for v in (0, 57, 199):
            it = g.neighbor_iterator(v)
            for _ in it:
                g.stats.reset()
                it.remove()
                moves = max(moves, g.stats.cell_moves)
        assert moves <= 2
        g.check_invariants()
        d = gen.random_tournament(60, seed=6)
        it = d.neighbor_iterator(0)
        for _ in it:
            d.stats.reset()
            it.remove()
            moves = max(moves, d.stats.cell_moves)
        assert moves <= 2
        d.check_invariants()
        info.append(f"max probes {worst}, max cell moves {moves}")


def _slope(name, sizes, reps):
    times = []
    for n in sizes:
        rep = measure(ex.get_experiment(name), BenchParams(n=n, seed=7, reps=reps))
        times.append(rep.median_ms)
    return scaling_exponent(sizes, times), times


def test_7_scaling():
    with criterion(7, "scaling exponents") as info:
        reps = env_int("COLGRAPH_ACCEPT_REPS", 5)
        s1, t1 = _slope("create-complete", [500, 1000, 2000, 4000], reps)
        info.append(f"create-complete slope {s1:.2f} (medians ms {', '.join(f'{t:.0f}' for t in t1)})")
        s2, t2 = _slope("dijkstra-sparse", [5000, 10_000, 20_000], reps)
        info.append(f"dijkstra-sparse slope {s2:.2f} (medians ms {', '.join(f'{t:.0f}' for t in t2)})")
        for name, n in (("create-complete", 2000), ("dijkstra-sparse", 1000), ("hopcroft-karp", 2000)):
            ours, ref, ratio = ex.compare_backends(name, BenchParams(n=n, seed=7, reps=3, warmups=1))
            assert ours.checksum == ref.checksum
            info.append(f"{name} naive/column-store {ratio:.2f}x")
        info.append(f"{reps} reps")
        assert s1 <= 2.4, f"create-complete slope {s1:.3f}"
        assert s2 <= 2.5, f"dijkstra-sparse slope {s2:.3f}"


GOLDEN = Path(__file__).parent / "golden"


def test_8_round_trip_io():
    with criterion(8, "read/write identity and golden bytes") as info:
        r = random.Random(8008)
        for i in range(1000):
            g = instances.rich_graph(r, KIND_NAMES[i % len(KIND_NAMES)])
            text = to_text(g)
            h = from_text(text)
            assert structurally_equal(g, h)
            assert to_text(h) == text
        files = sorted(GOLDEN.glob("*.txt"))
        assert files
        for path in files:
            assert to_text(load(path)).encode("utf-8") == path.read_bytes(), path.name
        info.append(f"1000 graphs over {len(KINDS)} kinds, {len(files)} golden files")
