import itertools
import math
from collections import Counter

import numpy as np
import pytest
from scipy import stats

from colgraph import generators as gen
from colgraph.algorithms import is_bipartite, is_connected
from colgraph.io import to_text


def edge_key(g):
    return frozenset((min(e.source, e.target), max(e.source, e.target)) for e in g.edges())


def test_complete_edge_count():
    assert gen.complete(5000).num_edges == 12_497_500
    assert gen.complete(1).num_edges == 0


@pytest.mark.parametrize("n", [1, 2, 3, 10, 57])
def test_random_tree_is_a_tree(n):
    for seed in range(20):
        t = gen.random_tree(n, seed=seed)
        assert t.num_edges == n - 1
        assert is_connected(t)


def test_prufer_uniform_on_four_vertices():
    # Cayley: 16 labeled trees on 4 vertices, each equally likely
    counts = Counter(edge_key(gen.random_tree(4, seed=s)) for s in range(8000))
    assert len(counts) == 16
    _, pval = stats.chisquare(list(counts.values()))
    assert pval > 1e-4


def test_regular_degrees():
    g = gen.regular2k(200, 3)
    assert set(g.degrees().tolist()) == {6}


def test_regular_small_cases():
    c5 = gen.regular2k(5, 1)
    assert edge_key(c5) == edge_key(gen.cycle(5))
    g = gen.regular2k(6, 2)
    assert g.num_edges == 12
    assert set(g.degrees().tolist()) == {4}


def test_regular_rejects_too_dense():
    with pytest.raises(ValueError):
        gen.regular2k(4, 2)


def test_gnm_forced_cases():
    assert edge_key(gen.gnm(10, 45, seed=3)) == edge_key(gen.complete(10))
    assert gen.gnm(10, 0, seed=3).num_edges == 0


def test_gnm_edge_marginals():
    trials = 10_000
    counts = Counter()
    for s in range(trials):
        counts.update(edge_key(gen.gnm(6, 8, seed=s)))
    p = 8 / 15
    sigma = math.sqrt(trials * p * (1 - p))
    assert len(counts) == 15
    for c in counts.values():
        assert abs(c - trials * p) <= 3 * sigma + 1


def test_gnm_uniform_over_graphs():
    counts = Counter(edge_key(gen.gnm(5, 3, seed=s)) for s in range(24_000))
    assert len(counts) == math.comb(10, 3)
    _, pval = stats.chisquare(list(counts.values()))
    assert pval > 1e-4


def test_gnm_dense_branch_uniform():
    # m above 60% of the pairs goes through complement sampling
    counts = Counter(edge_key(gen.gnm(4, 5, seed=s)) for s in range(6000))
    assert len(counts) == 6
    _, pval = stats.chisquare(list(counts.values()))
    assert pval > 1e-4


def test_gnp_forced_cases():
    assert gen.gnp(20, 0.0, seed=1).num_edges == 0
    assert gen.gnp(20, 1.0, seed=1).num_edges == 190


def test_gnp_mean_edges():
    ms = [gen.gnp(100, 0.2, seed=s).num_edges for s in range(1000)]
    mu = 4950 * 0.2
    sd = math.sqrt(4950 * 0.2 * 0.8)
    assert abs(np.mean(ms) - mu) <= 3 * sd / math.sqrt(len(ms))


def test_gnp_graph_distribution_chi_square():
    # each of the 64 graphs on 4 labeled vertices has probability p^k (1-p)^(6-k)
    p = 0.3
    trials = 100_000
    space = list(range(64))
    pairs = list(itertools.combinations(range(4), 2))
    index = {}
    for mask in space:
        index[frozenset(pr for b, pr in enumerate(pairs) if mask >> b & 1)] = mask
    counts = np.zeros(64)
    for s in range(trials):
        counts[index[edge_key(gen.gnp(4, p, seed=s))]] += 1
    k = np.array([bin(mask).count("1") for mask in space])
    expected = trials * p**k * (1 - p) ** (6 - k)
    _, pval = stats.chisquare(counts, expected)
    assert pval > 1e-4


def test_gnp_sparse_branch_edge_counts():
    # p < 0.1 uses geometric skips; the edge count must still be Binomial(C(n,2), p)
    n, p = 30, 0.05
    total = math.comb(n, 2)
    ms = np.array([gen.gnp(n, p, seed=s).num_edges for s in range(4000)])
    assert abs(ms.mean() - total * p) <= 3 * math.sqrt(total * p * (1 - p) / len(ms))
    assert abs(ms.var() - total * p * (1 - p)) <= 0.15 * total * p * (1 - p)


def test_tournament():
    t = gen.random_tournament(30, seed=4)
    assert t.num_edges == math.comb(30, 2)
    for v, u in itertools.combinations(range(30), 2):
        assert t.contains_edge(v, u) != t.contains_edge(u, v)


def test_bipartite():
    full = gen.random_bipartite_gnp(10, 1.0, seed=0)
    assert edge_key(full) == edge_key(gen.complete_bipartite(5, 5))
    for s in range(20):
        assert is_bipartite(gen.random_bipartite_gnp(20, 0.4, seed=s)) is not None


def test_digraph_gnp():
    n = 12
    assert gen.random_digraph_gnp(n, 1.0, seed=0).num_edges == n * (n - 1)
    assert gen.random_digraph_gnp(n, 0.0, seed=0).num_edges == 0
    ms = [gen.random_digraph_gnp(n, 0.25, seed=s).num_edges for s in range(1000)]
    total = n * (n - 1)
    assert abs(np.mean(ms) - total * 0.25) <= 3 * math.sqrt(total * 0.25 * 0.75 / 1000)
    for s in range(20):
        g = gen.random_digraph_gnp(n, 0.5, seed=s)
        assert all(e.source != e.target for e in g.edges())


def test_digraph_gnm():
    g = gen.random_digraph_gnm(50, 600, seed=2)
    assert g.num_edges == 600
    g.check_invariants()


def test_flow_network_integer_capacities():
    g = gen.random_flow_network(15, 0.3, seed=1)
    ws = [e.weight for e in g.edges()]
    assert all(1 <= w <= 100 and float(w).is_integer() for w in ws)


@pytest.mark.parametrize("family,kwargs", [
    ("gnm", {"n": 30, "m": 70}),
    ("gnp", {"n": 30, "p": 0.2}),
    ("digraph-gnp", {"n": 30, "p": 0.2}),
    ("tournament", {"n": 12}),
    ("random-tree", {"n": 25}),
    ("bipartite-gnp", {"n": 20, "p": 0.3}),
])
def test_seed_determinism(family, kwargs):
    fn = gen.FAMILIES[family]
    a = to_text(fn(seed=99, **kwargs))
    b = to_text(fn(seed=99, **kwargs))
    c = to_text(fn(seed=100, **kwargs))
    assert a == b
    assert a != c


def test_weighted_generation_reproducible():
    a = gen.gnm(20, 40, seed=7, weights=(1.0, 5.0))
    b = gen.gnm(20, 40, seed=7, weights=(1.0, 5.0))
    assert to_text(a) == to_text(b)
    assert all(1.0 <= e.weight <= 5.0 for e in a.edges())


def test_pair_codec_roundtrip():
    n = 40
    k = np.arange(math.comb(n, 2))
    i, j = gen.decode_pairs(k)
    assert np.all(i < j) and np.all(j < n)
    assert np.array_equal(gen.encode_pairs(i, j), k)
