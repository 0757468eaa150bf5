"""Random small instances paired with the plain edge lists the oracles consume."""

import random

from colgraph import DIGRAPH, GRAPH, KINDS, GraphBuilder


def _pairs(n, directed):
    if directed:
        return [(v, u) for v in range(n) for u in range(n) if v != u]
    return [(v, u) for v in range(n) for u in range(v + 1, n)]


def weighted_digraph(r: random.Random, max_n=16, negative=False):
    """Digraph with real weights; with ``negative`` some arcs are negative but no cycle is.

    Negative arcs come from reweighting by a random potential, which keeps
    every cycle weight non-negative.
    """
    n = r.randint(1, max_n)
    p = r.uniform(0.05, 0.6)
    pot = [r.uniform(0, 10) for _ in range(n)]
    arcs = []
    for v, u in _pairs(n, True):
        if r.random() < p:
            w = r.uniform(0, 10)
            if negative:
                w += pot[v] - pot[u]
            arcs.append((v, u, w))
    b = GraphBuilder(DIGRAPH).num_vertices(n)
    if arcs:
        b.edges([a[0] for a in arcs], [a[1] for a in arcs], weights=[a[2] for a in arcs])
    return b.build(), n, arcs


def capacity_network(r: random.Random, max_n=10):
    n = r.randint(2, max_n)
    p = r.uniform(0.1, 0.7)
    arcs = [(v, u, float(r.randint(1, 20))) for v, u in _pairs(n, True) if r.random() < p]
    b = GraphBuilder(DIGRAPH).num_vertices(n)
    if arcs:
        b.edges([a[0] for a in arcs], [a[1] for a in arcs], weights=[a[2] for a in arcs])
    s, t = r.sample(range(n), 2)
    return b.build(), n, arcs, s, t


def bipartite(r: random.Random, max_n=12):
    n = r.randint(1, max_n)
    side = [r.randrange(2) for _ in range(n)]
    p = r.uniform(0.1, 0.8)
    edges = [(v, u) for v, u in _pairs(n, False) if side[v] != side[u] and r.random() < p]
    b = GraphBuilder(GRAPH).num_vertices(n)
    if edges:
        b.edges([e[0] for e in edges], [e[1] for e in edges])
    return b.build(), n, edges


def weighted_graph(r: random.Random, max_n=8, max_p=0.7, integer=False):
    n = r.randint(1, max_n)
    p = r.uniform(0.1, max_p)
    edges = []
    for v, u in _pairs(n, False):
        if r.random() < p:
            w = float(r.randint(1, 6)) if integer else r.uniform(-3, 10)
            edges.append((v, u, w))
    b = GraphBuilder(GRAPH).num_vertices(n)
    if edges:
        b.edges([e[0] for e in edges], [e[1] for e in edges], weights=[e[2] for e in edges])
    return b.build(), n, edges


def simple_graph(r: random.Random, max_n=10):
    n = r.randint(1, max_n)
    p = r.uniform(0.1, 0.9)
    edges = [(v, u) for v, u in _pairs(n, False) if r.random() < p]
    b = GraphBuilder(GRAPH).num_vertices(n)
    if edges:
        b.edges([e[0] for e in edges], [e[1] for e in edges])
    return b.build(), n, edges


def rich_graph(r: random.Random, kind_name: str, max_n=20):
    """Any kind, optionally weighted and labeled, sometimes with non-default vertex ids."""
    kind = KINDS[kind_name]
    n = r.randint(0, max_n)
    b = GraphBuilder(kind)
    custom = r.random() < 0.3
    vweights = r.random() < 0.2
    vlabels = r.random() < 0.2
    ids = r.sample(range(3 * max_n + 5), n) if custom else list(range(n))
    if custom or vweights or vlabels:
        for v in ids:
            b.vertex(
                v,
                weight=r.uniform(-2, 2) if vweights else None,
                label=r.choice(["a b", "Iași", "x#y", "@k", "plain"]) if vlabels and r.random() < 0.8 else None,
            )
    else:
        b.num_vertices(n)
    ew = r.random() < 0.5
    el = r.random() < 0.3
    seen = set()
    for _ in range(r.randint(0, 3 * n)):
        v, u = r.choice(ids), r.choice(ids)
        if v == u and not kind.allows_self_loops:
            continue
        key = (v, u) if kind.directed or v <= u else (u, v)
        if not kind.allows_multiple_edges:
            if key in seen:
                continue
            seen.add(key)
        b.add_edge(
            v,
            u,
            weight=r.choice([r.uniform(-1e3, 1e3), 0.1, 1 / 3, 1e-300, 2.0]) if ew else None,
            label=r.choice(["e1", "two words", "%", None]) if el else None,
        )
    return b.build()
