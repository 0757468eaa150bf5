"""Minimum spanning trees (forests on disconnected input).

Both algorithms run on the support graph of their input.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..collections import EdgeSet
from . import _kernels as K
from .applicability import SimpleGraphAlgorithm


@dataclass
class SpanningTree:
    edges: EdgeSet
    weight: float

    @property
    def size(self) -> int:
        return len(self.edges)


class Prim(SimpleGraphAlgorithm):
    """Indexed-heap Prim; every tree grows from its lowest-index vertex."""

    def run(self) -> SpanningTree:
        g = self.graph
        csr = g.csr()
        n = csr.num_vertices
        parent = np.empty(n, dtype=np.int32)
        key = np.empty(n)
        hk = np.empty(n)
        hv = np.empty(n, dtype=np.int32)
        hp = np.empty(n, dtype=np.int32)
        total = K.prim_forest(csr.offsets, csr.targets, csr.weights, parent, key, hk, hv, hp)
        ids = csr.ids
        tree = EdgeSet()
        for v in np.flatnonzero(parent >= 0).tolist():
            tree.add(int(ids[parent[v]]), int(ids[v]))
        return SpanningTree(tree, float(total))


class Kruskal(SimpleGraphAlgorithm):
    """Sort edges by (weight, smaller endpoint, larger endpoint), then union-find."""

    def run(self) -> SpanningTree:
        g = self.graph
        csr = g.csr()
        n = csr.num_vertices
        owners = np.repeat(np.arange(n, dtype=np.int64), np.diff(csr.offsets))
        once = owners < csr.targets
        src = owners[once]
        dst = csr.targets[once].astype(np.int64)
        w = csr.weights[once]
        ids = csr.ids.astype(np.int64)
        lo = np.minimum(ids[src], ids[dst])
        hi = np.maximum(ids[src], ids[dst])
        order = np.lexsort((hi, lo, w))
        chosen = K.kruskal_select(n, src, dst, order)
        tree = EdgeSet()
        for a, b in zip(lo[chosen].tolist(), hi[chosen].tolist()):
            tree.add(a, b)
        return SpanningTree(tree, float(w[chosen].sum()))


def prim(g) -> SpanningTree:
    return Prim(g).run()


def kruskal(g) -> SpanningTree:
    return Kruskal(g).run()


def minimum_spanning_tree(g, algorithm: str = "prim") -> SpanningTree:
    return {"prim": prim, "kruskal": kruskal}[algorithm](g)
