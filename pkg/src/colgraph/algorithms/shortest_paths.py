"""Single-source and all-pairs shortest paths.

Edge weights are read from the graph (1.0 on unweighted graphs). The
implementation for a single source is picked by
:meth:`SingleSourceShortestPath.get_instance`:

* any negative weight: Bellman-Ford, which also reports negative cycles;
* otherwise Dijkstra, with an indexed binary heap when ``m < n^2 / log2 n``
  and with a linear scan over unsettled vertices on denser graphs.
"""

from __future__ import annotations

import math

import numpy as np

from ..collections import Cycle, Path
from ..errors import NegativeCycleError, NegativeWeightError
from ..transforms import cost_matrix
from . import _kernels as K
from .applicability import GraphAlgorithm


class ShortestPathResult:
    """Distances and shortest-path tree from one source.

    ``dist`` and ``parent`` are indexed by internal vertex position;
    ``parent`` holds positions (-1 for the source and unreachable vertices).
    """

    def __init__(self, g, source, dist, parent, negative_cycle=None, algorithm=""):
        self.graph = g
        self.source = source
        self.dist = dist
        self.parent = parent
        self.negative_cycle: Cycle | None = negative_cycle
        self.algorithm = algorithm

    @property
    def ids(self) -> np.ndarray:
        """Vertex id of each internal position."""
        return np.asarray(self.graph.vertices(), dtype=np.int64)

    def distance(self, v: int) -> float:
        return float(self.dist[self.graph.index_of(v)])

    def parent_of(self, v: int):
        p = self.parent[self.graph.index_of(v)]
        return None if p < 0 else self.graph.vertex_at(int(p))

    def is_reachable(self, v: int) -> bool:
        return math.isfinite(self.distance(v))

    def distances(self) -> dict[int, float]:
        return dict(zip(self.ids.tolist(), self.dist.tolist()))

    def path(self, v: int) -> Path | None:
        """Shortest path from the source to ``v``, or None when unreachable."""
        if self.negative_cycle is not None:
            raise NegativeCycleError(self.negative_cycle)
        a = self.graph.index_of(v)
        if not math.isfinite(self.dist[a]):
            return None
        ids = self.ids
        out = []
        steps = 0
        while a >= 0:
            out.append(int(ids[a]))
            a = int(self.parent[a])
            steps += 1
            if steps > len(ids):
                raise RuntimeError("parent pointers contain a cycle")
        out.reverse()
        return Path(out, weight=self.distance(v))

    def checksum(self) -> float:
        """Sum of finite distances."""
        d = self.dist[np.isfinite(self.dist)]
        return float(d.sum())


class _SSSP(GraphAlgorithm):
    name = "sssp"

    def __init__(self, graph, source: int):
        super().__init__(graph)
        self.source = source
        self._s = self.graph.index_of(source)

    def run(self) -> ShortestPathResult:
        raise NotImplementedError


class DijkstraHeap(_SSSP):
    name = "dijkstra-heap"

    def run(self, csr=None) -> ShortestPathResult:
        g = self.graph
        csr = csr or g.csr()
        if len(csr.weights) and csr.weights.min() < 0:
            raise NegativeWeightError("Dijkstra needs non-negative edge weights")
        n = csr.num_vertices
        dist = np.empty(n)
        parent = np.empty(n, dtype=np.int32)
        hk = np.empty(n)
        hv = np.empty(n, dtype=np.int32)
        hp = np.empty(n, dtype=np.int32)
        K.dijkstra_heap(csr.offsets, csr.targets, csr.weights, self._s, dist, parent, hk, hv, hp)
        return ShortestPathResult(g, self.source, dist, parent, algorithm=self.name)


class DijkstraArray(_SSSP):
    name = "dijkstra-array"

    def run(self, csr=None) -> ShortestPathResult:
        g = self.graph
        csr = csr or g.csr()
        if len(csr.weights) and csr.weights.min() < 0:
            raise NegativeWeightError("Dijkstra needs non-negative edge weights")
        n = csr.num_vertices
        dist = np.empty(n)
        parent = np.empty(n, dtype=np.int32)
        done = np.empty(n, dtype=np.bool_)
        K.dijkstra_array(csr.offsets, csr.targets, csr.weights, self._s, dist, parent, done)
        return ShortestPathResult(g, self.source, dist, parent, algorithm=self.name)


class BellmanFord(_SSSP):
    name = "bellman-ford"

    def run(self, csr=None) -> ShortestPathResult:
        g = self.graph
        csr = csr or g.csr()
        n = csr.num_vertices
        dist = np.empty(n)
        parent = np.empty(n, dtype=np.int32)
        x = K.bellman_ford(csr.offsets, csr.targets, csr.weights, self._s, dist, parent)
        cycle = None
        if x >= 0:
            ids = g.vertices()
            walk = [x]
            y = int(parent[x])
            while y != x:
                walk.append(y)
                y = int(parent[y])
            walk.reverse()
            cycle = Cycle([ids[a] for a in walk], weight=_cycle_weight(csr, walk))
        return ShortestPathResult(g, self.source, dist, parent, cycle, algorithm=self.name)


def _cycle_weight(csr, walk):
    total = 0.0
    for a, b in zip(walk, walk[1:] + walk[:1]):
        lo, hi = csr.offsets[a], csr.offsets[a + 1]
        ws = csr.weights[lo:hi][csr.targets[lo:hi] == b]
        total += float(ws.min())
    return total


class SingleSourceShortestPath:
    """Factory choosing the most suitable single-source algorithm."""

    @staticmethod
    def get_instance(g, source: int) -> _SSSP:
        csr = g.csr()
        if len(csr.weights) and csr.weights.min() < 0:
            return BellmanFord(g, source)
        n = g.num_vertices
        m = g.num_edges
        if n <= 2 or m < n * n / math.log2(n):
            return DijkstraHeap(g, source)
        return DijkstraArray(g, source)


def shortest_paths(g, source: int) -> ShortestPathResult:
    return SingleSourceShortestPath.get_instance(g, source).run()


def dijkstra(g, source: int, variant: str = "heap") -> ShortestPathResult:
    cls = {"heap": DijkstraHeap, "array": DijkstraArray}[variant]
    return cls(g, source).run()


def bellman_ford(g, source: int) -> ShortestPathResult:
    return BellmanFord(g, source).run()


def floyd_warshall(g) -> np.ndarray:
    """All-pairs distance matrix over internal positions.

    Raises :class:`NegativeCycleError` when a negative cycle exists.
    """
    d = cost_matrix(g)
    n = len(d)
    for k in range(n):
        np.minimum(d, d[:, k, None] + d[None, k, :], out=d)
    neg = np.flatnonzero(np.diagonal(d) < 0)
    if len(neg):
        r = bellman_ford(g, g.vertex_at(int(neg[0])))
        raise NegativeCycleError(r.negative_cycle.to_list() if r.negative_cycle is not None else [])
    return d


def all_pairs_shortest_paths(g, method: str = "auto") -> np.ndarray:
    """Distance matrix by Floyd-Warshall or by one single-source run per vertex.

    ``auto`` uses Floyd-Warshall when the graph is dense and repeated
    single-source runs otherwise.
    """
    n = g.num_vertices
    if method == "auto":
        dense = n > 2 and g.num_edges >= n * n / math.log2(n)
        method = "floyd-warshall" if dense else "repeated"
    if method == "floyd-warshall":
        return floyd_warshall(g)
    if method != "repeated":
        raise ValueError(f"unknown all-pairs method {method!r}")
    out = np.empty((n, n))
    ids = g.vertices()
    csr = g.csr()
    for a in range(n):
        r = SingleSourceShortestPath.get_instance(g, ids[a]).run(csr)
        if r.negative_cycle is not None:
            raise NegativeCycleError(r.negative_cycle.to_list())
        out[a] = r.dist
    return out
