"""Greedy vertex coloring."""

from __future__ import annotations

import numpy as np

from .applicability import SIMPLE_UNDIRECTED, prepare


class Coloring:
    """Colors indexed by internal vertex position; ``color(v)`` looks up by id."""

    def __init__(self, g, colors: np.ndarray):
        self.graph = g
        self.colors = colors

    def color(self, v: int) -> int:
        return int(self.colors[self.graph.index_of(v)])

    @property
    def num_colors(self) -> int:
        return int(self.colors.max()) + 1 if len(self.colors) else 0

    def classes(self) -> list[list[int]]:
        ids = self.graph.vertices()
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for a, c in enumerate(self.colors.tolist()):
            out[c].append(ids[a])
        return out

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.graph.vertices(), self.colors.tolist()))

    def is_proper(self, g=None) -> bool:
        g = self.graph if g is None else prepare(g, SIMPLE_UNDIRECTED)
        return all(self.color(e.source) != self.color(e.target) for e in g.edges())


def greedy_coloring(g, order=None) -> Coloring:
    """Each vertex in turn gets the smallest color unused by its colored neighbors.

    ``order`` is a sequence of vertex ids; the default is internal index order.
    At most ``max degree + 1`` colors are used.
    """
    g = prepare(g, SIMPLE_UNDIRECTED)
    csr = g.csr()
    n = csr.num_vertices
    off = csr.offsets.tolist()
    tgt = csr.targets.tolist()
    seq = range(n) if order is None else [g.index_of(v) for v in order]
    if order is not None and sorted(seq) != list(range(n)):
        raise ValueError("order must list every vertex exactly once")
    colors = [-1] * n
    # mark[c] == v means color c is taken by a neighbor of v
    mark = [-1] * (int(np.diff(csr.offsets).max(initial=0)) + 2)
    for v in seq:
        for k in range(off[v], off[v + 1]):
            c = colors[tgt[k]]
            if c >= 0:
                mark[c] = v
        c = 0
        while mark[c] == v:
            c += 1
        colors[v] = c
    return Coloring(g, np.asarray(colors, dtype=np.int32))
