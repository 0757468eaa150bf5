import math
import random

import numpy as np
import pytest

from colgraph import DIGRAPH, GRAPH, PSEUDOGRAPH, GraphBuilder, UnsupportedKindError, new_graph
from colgraph import generators as gen
from colgraph import transforms as T
from colgraph.algorithms import connected_components
from colgraph.io import structurally_equal

from conftest import random_graph


def pairs(g):
    return sorted((min(e.source, e.target), max(e.source, e.target)) for e in g.edges())


def arcs(g):
    return sorted((e.source, e.target) for e in g.edges())


def test_adjacency_matrix_k3():
    a = T.adjacency_matrix(gen.complete(3))
    assert np.array_equal(a, np.ones((3, 3), dtype=int) - np.eye(3, dtype=int))


def test_cost_matrix_weighted_triangle():
    g = GraphBuilder().num_vertices(3).add_edge(0, 1, 2.5).add_edge(0, 2, 4.0).add_edge(1, 2, 1.0).build()
    c = T.cost_matrix(g)
    assert c[0][1] == 2.5 and c[1][0] == 2.5
    assert c[0][2] == g.get_edge_weight(0, 2)
    assert np.all(np.diagonal(c) == 0)


def test_cost_matrix_missing_edge_is_infinite():
    c = T.cost_matrix(gen.path(3))
    assert c[0][2] == math.inf


def test_incidence_single_arc():
    g = GraphBuilder(DIGRAPH).num_vertices(2).add_edge(0, 1).build()
    assert T.incidence_matrix(g)[:, 0].tolist() == [-1, 1]


def test_incidence_undirected_column_sums():
    g = gen.gnm(12, 30, seed=3)
    inc = T.incidence_matrix(g)
    assert inc.shape == (12, 30)
    assert np.all(inc.sum(axis=0) == 2)
    assert inc.sum(axis=1).tolist() == g.degrees().tolist()


def test_complement_of_complete():
    assert T.complement(gen.complete(6)).num_edges == 0


def test_complement_involution():
    r = random.Random(1)
    for _ in range(20):
        g = gen.gnp(15, r.random(), seed=r.randrange(10**6))
        c = T.complement(g)
        assert g.num_edges + c.num_edges == math.comb(15, 2)
        assert pairs(T.complement(c)) == pairs(g)


def test_complement_requires_simple_undirected():
    with pytest.raises(UnsupportedKindError):
        T.complement(new_graph(PSEUDOGRAPH))


def test_transpose_involution():
    d = gen.random_digraph_gnp(20, 0.2, seed=5, weights=(1.0, 3.0))
    t = T.transpose(d)
    assert arcs(t) == sorted((v, u) for u, v in arcs(d))
    assert structurally_equal(T.transpose(t), d)


def test_line_graph_path():
    lg = T.line_graph(gen.path(3))
    assert (lg.num_vertices, lg.num_edges) == (2, 1)


def test_line_graph_edge_count():
    g = gen.gnm(20, 50, seed=9)
    lg = T.line_graph(g)
    assert lg.num_vertices == 50
    assert lg.num_edges == sum(math.comb(int(d), 2) for d in g.degrees())


def test_support_of_pseudograph():
    p = new_graph(PSEUDOGRAPH)
    p.add_vertices(2)
    p.add_edge(0, 1)
    p.add_edge(0, 1)
    p.add_edge(0, 0)
    s = T.support_graph(p)
    assert s.kind is GRAPH
    assert pairs(s) == [(0, 1)]


def test_support_of_random_kinds():
    r = random.Random(3)
    for kind in ["digraph", "multigraph", "pseudograph", "dmultigraph", "dpseudograph"]:
        for _ in range(10):
            g = random_graph(r, kind, 10, 40)
            s = T.support_graph(g)
            expected = sorted({(min(e.source, e.target), max(e.source, e.target)) for e in g.edges() if e.source != e.target})
            assert s.kind is GRAPH
            assert pairs(s) == expected
            s.check_invariants()


def test_contract_c4_gives_c3():
    h = T.contract_edge(gen.cycle(4), 0, 1)
    assert (h.num_vertices, h.num_edges) == (3, 3)
    assert all(h.degree(v) == 2 for v in h.vertices())


def test_contract_triangle_drops_loop_and_parallel():
    h = T.contract_edge(gen.complete(3), 0, 1)
    assert pairs(h) == [(0, 2)]


def test_contract_in_pseudograph_keeps_loops():
    p = new_graph(PSEUDOGRAPH)
    p.add_vertices(3)
    for v, u in [(0, 1), (1, 2), (0, 2), (0, 1)]:
        p.add_edge(v, u)
    h = T.contract_edge(p, 0, 1)
    assert h.self_loops(0) == 1
    assert h.multiplicity(0, 2) == 2


def test_split_vertex():
    g, w = T.split_vertex(gen.star(4), 0, ([1], [2, 3]))
    assert w == 4
    assert pairs(g) == [(0, 1), (2, 4), (3, 4)]


def test_disjoint_union_k2_k2():
    g = T.disjoint_union(gen.complete(2), gen.complete(2))
    assert (g.num_vertices, g.num_edges) == (4, 2)
    assert len(connected_components(g)) == 2


def test_join_of_edgeless_pairs_is_k22():
    j = T.join(gen.empty(2), gen.empty(2))
    assert j.num_edges == 4
    assert pairs(j) == pairs(gen.complete_bipartite(2, 2))


def test_union_shared_ids():
    u = T.union(gen.path(3), gen.cycle(3))
    assert pairs(u) == [(0, 1), (0, 2), (1, 2)]


def test_union_mixed_kinds_rejected():
    with pytest.raises((UnsupportedKindError, ValueError)):
        T.union(gen.path(3), gen.random_digraph_gnp(3, 0.5, seed=1))
