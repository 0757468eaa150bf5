"""Fluent construction of column-store graphs.

The builder collects vertices and edges into flat buffers and hands them to
the graph's vectorized bulk loader, which is much faster than repeated
``add_edge`` calls for large inputs.
"""

from __future__ import annotations

from typing import Any, Iterable

import numpy as np

from ..errors import (
    DuplicateVertexError,
    InvalidVertexError,
    UnsupportedKindError,
    VertexNotFoundError,
)
from .graph import DEFAULT_ADJACENCY_CAPACITY, INT32_MAX, Graph, graph_class
from .kinds import GRAPH, GraphKind


class GraphBuilder:
    """Accumulates a graph description and builds it in one pass.

    Example:
        >>> g = GraphBuilder().num_vertices(3).add_edge(0, 1).add_edge(1, 2).build()
        >>> g.num_edges
        2
    """

    def __init__(self, kind: GraphKind | str = GRAPH):
        self._kind = GraphKind.from_name(kind) if isinstance(kind, str) else kind
        self._name = None
        self._ids: list[int] = []
        self._vlabels: dict[int, Any] = {}
        self._vweights: dict[int, float] = {}
        self._src: list[np.ndarray] = []
        self._dst: list[np.ndarray] = []
        self._weights: list[np.ndarray | None] = []
        self._labels: list[list | None] = []
        self._default = True
        self._estimated_degree = DEFAULT_ADJACENCY_CAPACITY
        self._bitset_threshold = None

    def kind(self, kind: GraphKind | str) -> GraphBuilder:
        self._kind = GraphKind.from_name(kind) if isinstance(kind, str) else kind
        return self

    def named(self, name: str) -> GraphBuilder:
        self._name = name
        return self

    def num_vertices(self, n: int) -> GraphBuilder:
        """Add vertices ``len .. len+n-1`` with default ids."""
        start = self._ids[-1] + 1 if self._ids else 0
        self._ids.extend(range(start, start + n))
        return self

    def vertex(self, v: int, *, label=None, weight: float | None = None) -> GraphBuilder:
        if not 0 <= v <= INT32_MAX:
            raise InvalidVertexError(f"vertex ids must be in 0..{INT32_MAX}, got {v}")
        if self._ids and v <= self._ids[-1]:
            self._default = False
        elif v != len(self._ids):
            self._default = False
        self._ids.append(v)
        if label is not None:
            self._vlabels[v] = label
        if weight is not None:
            self._vweights[v] = float(weight)
        return self

    def vertices(self, ids: Iterable[int]) -> GraphBuilder:
        for v in ids:
            self.vertex(int(v))
        return self

    def labeled_vertices(self, labels: Iterable) -> GraphBuilder:
        """Add one default-id vertex per label."""
        for label in labels:
            self.vertex(self._ids[-1] + 1 if self._ids else 0, label=label)
        return self

    def estimated_degree(self, d: int) -> GraphBuilder:
        """Initial adjacency capacity per vertex; avoids regrowth when known."""
        self._estimated_degree = max(int(d), 1)
        return self

    def bitset_threshold(self, t: int | None) -> GraphBuilder:
        self._bitset_threshold = t
        return self

    def add_edge(self, v: int, u: int, weight: float | None = None, label=None) -> GraphBuilder:
        self._src.append(np.array([v], dtype=np.int64))
        self._dst.append(np.array([u], dtype=np.int64))
        self._weights.append(None if weight is None else np.array([weight], dtype=np.float64))
        self._labels.append(None if label is None else [label])
        return self

    def add_labeled_edge(self, v: int, u: int, label) -> GraphBuilder:
        return self.add_edge(v, u, label=label)

    def edges(self, src, dst=None, weights=None, labels=None) -> GraphBuilder:
        """Add many edges at once.

        ``src`` may be an ``(m, 2)`` array or a sequence of pairs when ``dst``
        is omitted.
        """
        if dst is None:
            pairs = np.asarray(src, dtype=np.int64).reshape(-1, 2)
            src, dst = pairs[:, 0], pairs[:, 1]
        src = np.asarray(src, dtype=np.int64).ravel()
        dst = np.asarray(dst, dtype=np.int64).ravel()
        if len(src) != len(dst):
            raise ValueError("source and target arrays differ in length")
        self._src.append(src)
        self._dst.append(dst)
        if weights is not None:
            weights = np.asarray(weights, dtype=np.float64).ravel()
            if len(weights) != len(src):
                raise ValueError("weight array length differs from edge count")
        self._weights.append(weights)
        if labels is not None:
            labels = list(labels)
            if len(labels) != len(src):
                raise ValueError("label list length differs from edge count")
        self._labels.append(labels)
        return self

    def build(self, kind: GraphKind | str | None = None) -> Graph:
        if kind is not None:
            self.kind(kind)
        ids = self._ids
        if not self._default and len(set(ids)) != len(ids):
            seen = set()
            for v in ids:
                if v in seen:
                    raise DuplicateVertexError(v)
                seen.add(v)
        g = graph_class(self._kind)(
            name=self._name,
            vertex_capacity=len(ids),
            adjacency_capacity=self._estimated_degree,
            bitset_threshold=self._bitset_threshold,
        )
        if ids and ids[0] == 0 and ids[-1] == len(ids) - 1 and self._default:
            g._add_default_vertices(len(ids))
        else:
            for v in ids:
                g.add_vertex(v)
        for v, w in self._vweights.items():
            g.set_vertex_weight(v, w)
        for v, label in self._vlabels.items():
            g.set_vertex_label(v, label)
        if self._src:
            src = np.concatenate(self._src)
            dst = np.concatenate(self._dst)
            weights = None
            if any(w is not None for w in self._weights):
                weights = np.concatenate(
                    [np.ones(len(s)) if w is None else w for s, w in zip(self._src, self._weights)]
                )
            labels = None
            if any(lab is not None for lab in self._labels):
                labels = []
                for s, lab in zip(self._src, self._labels):
                    labels.extend([None] * len(s) if lab is None else lab)
            a = _to_positions(g, src)
            b = _to_positions(g, dst)
            g._bulk_add_edges(a, b, weights, labels)
        return g


def _to_positions(g: Graph, ids: np.ndarray) -> np.ndarray:
    n = g.num_vertices
    if g.has_default_vertices():
        bad = np.flatnonzero((ids < 0) | (ids >= n))
        if len(bad):
            raise VertexNotFoundError(int(ids[bad[0]]))
        return ids
    order, sorted_ids = g._sorted_ids()
    at = np.searchsorted(sorted_ids, ids)
    at_clip = np.minimum(at, max(n - 1, 0))
    bad = np.flatnonzero((at >= n) | (sorted_ids[at_clip] != ids)) if n else np.arange(len(ids))
    if len(bad):
        raise VertexNotFoundError(int(ids[bad[0]]))
    return order[at]


def build_graph(
    kind: GraphKind | str = GRAPH,
    n: int | None = None,
    edges=None,
    *,
    vertices: Iterable[int] | None = None,
    weights=None,
    labels=None,
    name: str | None = None,
    estimated_degree: int | None = None,
) -> Graph:
    """One-call construction from a vertex count (or id list) and an edge array."""
    b = GraphBuilder(kind)
    if name:
        b.named(name)
    if vertices is not None:
        b.vertices(vertices)
    elif n is not None:
        b.num_vertices(n)
    if estimated_degree is not None:
        b.estimated_degree(estimated_degree)
    if edges is not None and len(edges):
        b.edges(edges, weights=weights, labels=labels)
    return b.build()


def add_edges(g: Graph, src, dst, weights=None, labels=None) -> None:
    """Bulk-append edges (given as vertex ids) to an existing graph."""
    src = np.asarray(src, dtype=np.int64).ravel()
    dst = np.asarray(dst, dtype=np.int64).ravel()
    if len(src) != len(dst):
        raise ValueError("source and target arrays differ in length")
    if not isinstance(g, Graph):
        raise UnsupportedKindError("add_edges needs a column-store graph")
    g._bulk_add_edges(_to_positions(g, src), _to_positions(g, dst), weights, labels)
