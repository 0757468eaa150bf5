"""Derived representations (dense matrices) and whole-graph operations.

Every operation returns a new graph; the inputs are never modified. Rows and
columns of the matrices follow internal vertex positions, i.e. the order of
``g.vertices()``.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .core.builder import GraphBuilder, add_edges
from .core.graph import Graph
from .core.kinds import GRAPH
from .errors import EdgeNotFoundError, UnsupportedKindError, VertexNotFoundError

MAX_DENSE_CELLS = 1 << 30


def _check_size(rows, cols):
    if rows * cols > MAX_DENSE_CELLS:
        raise MemoryError(f"dense matrix of {rows}x{cols} cells exceeds the {MAX_DENSE_CELLS} cell budget")


def _require_simple_undirected(g, what):
    if g.kind != GRAPH:
        raise UnsupportedKindError(f"{what} needs a simple undirected graph, got {g.kind.name}")


def _require_directed(g, what):
    if not g.kind.directed:
        raise UnsupportedKindError(f"{what} needs a directed graph, got {g.kind.name}")


class EdgeTable:
    """Column view of all edges of a graph, in ``g.edges()`` order."""

    def __init__(self, g: Graph):
        src, dst, w, lab = [], [], [], []
        for e in g.edges():
            src.append(e.source)
            dst.append(e.target)
            w.append(e.weight)
            lab.append(e.label)
        self.src = np.asarray(src, dtype=np.int64)
        self.dst = np.asarray(dst, dtype=np.int64)
        self.weights = np.asarray(w, dtype=np.float64) if g.is_edge_weighted() else None
        self.labels = lab if g.is_edge_labeled() else None

    def __len__(self):
        return len(self.src)


def _rebuild(kind, ids, src, dst, weights=None, labels=None, *, name=None, vertex_source=None):
    """New graph of ``kind`` on ``ids`` with the given edges, copying vertex data."""
    b = GraphBuilder(kind)
    if name:
        b.named(name)
    b.vertices(ids)
    if len(src):
        b.edges(src, dst, weights=weights, labels=labels)
    g = b.build()
    if vertex_source is not None:
        _copy_vertex_data(vertex_source, g, ids)
    return g


def _copy_vertex_data(source, g, ids, offset=0):
    if source.is_vertex_weighted():
        for v in ids:
            if source.contains_vertex(v - offset):
                g.set_vertex_weight(v, source.get_vertex_weight(v - offset))
    if source.is_vertex_labeled():
        for v in ids:
            if source.contains_vertex(v - offset):
                g.set_vertex_label(v, source.get_vertex_label(v - offset))


# ------------------------------------------------------------- matrices


def adjacency_matrix(g: Graph) -> np.ndarray:
    """``a[i][j]`` counts the edges joining positions i and j.

    Symmetric for undirected graphs; a self-loop adds 1 to its diagonal cell.
    """
    n = g.num_vertices
    _check_size(n, n)
    a = np.zeros((n, n), dtype=np.int64)
    csr = g.csr()
    owners = np.repeat(np.arange(n), np.diff(csr.offsets))
    np.add.at(a, (owners, csr.targets), 1)
    if not g.kind.directed:
        d = np.diagonal(a).copy()
        a[np.diag_indices(n)] = d // 2
    return a


def cost_matrix(g: Graph) -> np.ndarray:
    """Edge weight between positions, ``inf`` for non-adjacent pairs, 0 on the diagonal.

    Parallel edges keep the minimum weight.
    """
    n = g.num_vertices
    _check_size(n, n)
    c = np.full((n, n), np.inf)
    csr = g.csr()
    owners = np.repeat(np.arange(n), np.diff(csr.offsets))
    np.minimum.at(c, (owners, csr.targets), csr.weights)
    c[np.diag_indices(n)] = 0.0
    return c


def incidence_matrix(g: Graph) -> np.ndarray:
    """One column per edge, in ``g.edges()`` order.

    Undirected: 1 at both endpoints. Directed: -1 at the source, +1 at the
    target. A self-loop has a single entry 2.
    """
    n = g.num_vertices
    m = g.num_edges
    _check_size(n, m)
    out = np.zeros((n, m), dtype=np.int8)
    for k, e in enumerate(g.edges()):
        a = g.index_of(e.source)
        b = g.index_of(e.target)
        if a == b:
            out[a, k] = 2
        elif g.kind.directed:
            out[a, k] = -1
            out[b, k] = 1
        else:
            out[a, k] = 1
            out[b, k] = 1
    return out


# ------------------------------------------------------- derived graphs


def complement(g: Graph) -> Graph:
    _require_simple_undirected(g, "complement")
    n = g.num_vertices
    ids = np.asarray(g.vertices(), dtype=np.int64)
    present = adjacency_matrix(g).astype(bool)
    i, j = np.triu_indices(n, 1)
    keep = ~present[i, j]
    return _rebuild(GRAPH, ids.tolist(), ids[i[keep]], ids[j[keep]], vertex_source=g)


def transpose(g: Graph) -> Graph:
    """Every arc reversed; weights and labels travel with their arcs."""
    _require_directed(g, "transpose")
    t = EdgeTable(g)
    return _rebuild(g.kind, g.vertices(), t.dst, t.src, t.weights, t.labels, vertex_source=g)


def support_graph(g: Graph) -> Graph:
    """Simple undirected graph: directions dropped, parallels merged, loops removed.

    A merged edge keeps the minimum weight of its copies and the position of
    its first copy in edge order.
    """
    if g.kind == GRAPH:
        return g.copy()
    weighted = g.is_edge_weighted()
    best: dict[tuple[int, int], float] = {}
    for e in g.edges():
        a, b = e.source, e.target
        if a == b:
            continue
        key = (a, b) if a <= b else (b, a)
        w = 1.0 if e.weight is None else e.weight
        if key not in best or w < best[key]:
            best[key] = w
    src = [k[0] for k in best]
    dst = [k[1] for k in best]
    w = list(best.values()) if weighted else None
    return _rebuild(GRAPH, g.vertices(), src, dst, w, vertex_source=g)


def line_graph(g: Graph) -> Graph:
    """One vertex per edge (numbered in ``g.edges()`` order), adjacent iff the edges share an endpoint."""
    _require_simple_undirected(g, "line graph")
    edges = list(g.edges())
    incident: dict[int, list[int]] = {v: [] for v in g.vertices()}
    for k, e in enumerate(edges):
        incident[e.source].append(k)
        incident[e.target].append(k)
    src, dst = [], []
    for ks in incident.values():
        for x in range(len(ks)):
            for y in range(x + 1, len(ks)):
                src.append(ks[x])
                dst.append(ks[y])
    return _rebuild(GRAPH, list(range(len(edges))), src, dst)


# ----------------------------------------------------------- operations


def contract_edge(g: Graph, v: int, u: int) -> Graph:
    """Merge ``u`` into ``v`` along an edge ``vu``.

    One copy of ``vu`` disappears. Other edges of ``u`` move to ``v``; in
    kinds without loops the resulting loops are dropped, and in simple
    kinds resulting parallel edges are merged (the first copy is kept).
    """
    if not g.contains_vertex(v):
        raise VertexNotFoundError(v)
    if not g.contains_vertex(u):
        raise VertexNotFoundError(u)
    if v == u:
        raise ValueError("cannot contract a self-loop")
    if not (g.contains_edge(v, u) or (g.kind.directed and g.contains_edge(u, v))):
        raise EdgeNotFoundError(v, u)
    kind = g.kind
    t = EdgeTable(g)
    src, dst = t.src.copy(), t.dst.copy()
    keep = np.ones(len(src), dtype=bool)
    forward = (src == v) & (dst == u)
    backward = (src == u) & (dst == v)
    hit = np.flatnonzero(forward if kind.directed else forward | backward)
    if len(hit) == 0:
        hit = np.flatnonzero(backward)
    keep[hit[0]] = False
    src[src == u] = v
    dst[dst == u] = v
    if not kind.allows_self_loops:
        keep &= src != dst
    if not kind.allows_multiple_edges:
        seen = set()
        for k in np.flatnonzero(keep).tolist():
            a, b = int(src[k]), int(dst[k])
            key = (a, b) if kind.directed or a <= b else (b, a)
            if key in seen:
                keep[k] = False
            seen.add(key)
    ids = [x for x in g.vertices() if x != u]
    w = None if t.weights is None else t.weights[keep]
    labels = None if t.labels is None else [lab for lab, k in zip(t.labels, keep) if k]
    return _rebuild(kind, ids, src[keep], dst[keep], w, labels, vertex_source=g)


def split_vertex(g: Graph, v: int, partition: tuple[Iterable[int], Iterable[int]]) -> tuple[Graph, int]:
    """Replace ``v`` by ``v`` and a new vertex ``w``.

    ``partition = (A, B)`` must split the neighbors of ``v`` (successors and
    predecessors in digraphs) into two disjoint sets; edges towards ``A``
    stay on ``v``, edges towards ``B`` move to ``w``. Loops stay on ``v``.
    ``w`` gets the next free vertex id and is placed last. Returns the new
    graph and ``w``.
    """
    if not g.contains_vertex(v):
        raise VertexNotFoundError(v)
    side_a, side_b = set(partition[0]), set(partition[1])
    nbrs = set(g.neighbors(v))
    if g.kind.directed:
        nbrs |= set(g.predecessors(v))
    nbrs.discard(v)
    if side_a & side_b:
        raise ValueError("partition sides overlap")
    if side_a | side_b != nbrs:
        raise ValueError("partition must cover exactly the neighbors of the vertex")
    w = g.next_vertex_id
    t = EdgeTable(g)
    src, dst = t.src.copy(), t.dst.copy()
    for k in range(len(src)):
        a, b = int(src[k]), int(dst[k])
        if a == v and b in side_b:
            src[k] = w
        elif b == v and a in side_b:
            dst[k] = w
    ids = g.vertices() + [w]
    out = _rebuild(g.kind, ids, src, dst, t.weights, t.labels, vertex_source=g)
    return out, w


def _same_kind(g1, g2, what):
    if g1.kind != g2.kind:
        raise UnsupportedKindError(f"{what} needs graphs of the same kind, got {g1.kind.name} and {g2.kind.name}")
    return g1.kind


def union(g1: Graph, g2: Graph) -> Graph:
    """Union on the shared id space.

    Vertices: union of both sets (``g1``'s order first). Edges: set union in
    simple kinds, multiset maximum of multiplicities otherwise. Weights and
    labels come from ``g1`` where an edge exists in both.
    """
    kind = _same_kind(g1, g2, "union")
    ids = g1.vertices() + [v for v in g2.vertices() if not g1.contains_vertex(v)]

    def key(a, b):
        return (a, b) if kind.directed or a <= b else (b, a)

    src, dst, w, labels = [], [], [], []
    count1: dict = {}
    weighted = g1.is_edge_weighted() or g2.is_edge_weighted()
    labeled = g1.is_edge_labeled() or g2.is_edge_labeled()
    for e in g1.edges():
        k = key(e.source, e.target)
        count1[k] = count1.get(k, 0) + 1
        src.append(e.source)
        dst.append(e.target)
        w.append(g1.get_edge_weight(e.source, e.target) if e.weight is None else e.weight)
        labels.append(e.label)
    used2: dict = {}
    for e in g2.edges():
        k = key(e.source, e.target)
        used2[k] = used2.get(k, 0) + 1
        if used2[k] > count1.get(k, 0):
            src.append(e.source)
            dst.append(e.target)
            w.append(1.0 if e.weight is None else e.weight)
            labels.append(e.label)
    out = _rebuild(kind, ids, src, dst, w if weighted else None, labels if labeled else None)
    _copy_vertex_data(g2, out, [v for v in ids if g2.contains_vertex(v)])
    _copy_vertex_data(g1, out, g1.vertices())
    return out


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` plus a copy of ``g2`` whose ids are shifted by ``g1.next_vertex_id``.

    With default vertices the shift is ``n1``, so ``g2``'s vertex ``i``
    becomes ``n1 + i``.
    """
    kind = _same_kind(g1, g2, "disjoint union")
    offset = g1.next_vertex_id
    ids = g1.vertices() + [v + offset for v in g2.vertices()]
    t1, t2 = EdgeTable(g1), EdgeTable(g2)
    weighted = t1.weights is not None or t2.weights is not None
    labeled = t1.labels is not None or t2.labels is not None
    src = np.concatenate([t1.src, t2.src + offset])
    dst = np.concatenate([t1.dst, t2.dst + offset])
    w = None
    if weighted:
        w = np.concatenate([
            np.ones(len(t1)) if t1.weights is None else t1.weights,
            np.ones(len(t2)) if t2.weights is None else t2.weights,
        ])
    labels = None
    if labeled:
        labels = (t1.labels or [None] * len(t1)) + (t2.labels or [None] * len(t2))
    out = _rebuild(kind, ids, src, dst, w, labels)
    _copy_vertex_data(g1, out, g1.vertices())
    _copy_vertex_data(g2, out, [v + offset for v in g2.vertices()], offset)
    return out


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus an edge between every vertex of ``g1`` and every vertex of ``g2``.

    For digraphs both arcs are added.
    """
    out = disjoint_union(g1, g2)
    offset = g1.next_vertex_id
    left = np.asarray(g1.vertices(), dtype=np.int64)
    right = np.asarray(g2.vertices(), dtype=np.int64) + offset
    a = np.repeat(left, len(right))
    b = np.tile(right, len(left))
    if out.kind.directed:
        add_edges(out, np.concatenate([a, b]), np.concatenate([b, a]))
    else:
        add_edges(out, a, b)
    return out
