"""Degree measures and distance metrics.

Distances are hop counts computed by BFS from every vertex. The
eccentricity family works on the support graph; on a disconnected graph
every eccentricity is infinite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .applicability import SIMPLE_UNDIRECTED, prepare


@dataclass
class GraphMetrics:
    min_degree: int
    max_degree: int
    avg_degree: float
    girth: float
    radius: float
    diameter: float
    center: list[int]
    periphery: list[int]
    pseudo_peripheral_vertex: int | None


def degree_stats(g) -> tuple[int, int, float]:
    """(min, max, average) degree; out-degree for digraphs, loops count twice."""
    n = g.num_vertices
    if n == 0:
        return 0, 0, 0.0
    d = g.degrees()
    return int(d.min()), int(d.max()), float(d.sum()) / n


def distance_matrix(g) -> np.ndarray:
    """Hop distances by internal position (float, inf when unreachable).

    Directed graphs keep their directions here.
    """
    csr = g.csr()
    hops = K.all_pairs_hops(csr.offsets, csr.targets).astype(np.float64)
    hops[hops < 0] = math.inf
    return hops


def eccentricities(g) -> dict[int, float]:
    g = prepare(g, SIMPLE_UNDIRECTED)
    if g.num_vertices == 0:
        return {}
    ecc = distance_matrix(g).max(axis=1)
    return dict(zip(g.vertices(), ecc.tolist()))


def radius(g) -> float:
    e = eccentricities(g)
    return min(e.values()) if e else math.inf


def diameter(g) -> float:
    e = eccentricities(g)
    return max(e.values()) if e else math.inf


def center(g) -> list[int]:
    e = eccentricities(g)
    r = min(e.values(), default=math.inf)
    return [v for v, x in e.items() if x == r]


def periphery(g) -> list[int]:
    e = eccentricities(g)
    d = max(e.values(), default=math.inf)
    return [v for v, x in e.items() if x == d]


def girth(g) -> float:
    """Length of a shortest cycle of the support graph; inf for forests."""
    g = prepare(g, SIMPLE_UNDIRECTED)
    csr = g.csr()
    c = int(K.girth(csr.offsets, csr.targets))
    return math.inf if c == 0 else float(c)


def pseudo_peripheral_vertex(g, start: int | None = None):
    """Alternating-BFS heuristic: jump to a minimum-degree vertex of the last
    BFS level until the eccentricity stops growing. Stays within the
    component of ``start`` (default: lowest-index vertex)."""
    g = prepare(g, SIMPLE_UNDIRECTED)
    n = g.num_vertices
    if n == 0:
        return None
    csr = g.csr()
    deg = np.diff(csr.offsets)
    level = np.empty(n, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    v = 0 if start is None else g.index_of(start)
    K.bfs_levels(csr.offsets, csr.targets, v, level, queue)
    ecc = int(level.max())
    while True:
        last = np.flatnonzero(level == ecc)
        u = int(last[np.argmin(deg[last])])
        K.bfs_levels(csr.offsets, csr.targets, u, level, queue)
        e = int(level.max())
        if e <= ecc:
            break
        v, ecc = u, e
    return int(csr.ids[v])


def metrics(g) -> GraphMetrics:
    lo, hi, avg = degree_stats(g)
    s = prepare(g, SIMPLE_UNDIRECTED)
    e = eccentricities(s)
    r = min(e.values(), default=math.inf)
    d = max(e.values(), default=math.inf)
    return GraphMetrics(
        lo,
        hi,
        avg,
        girth(s),
        r,
        d,
        [v for v, x in e.items() if x == r],
        [v for v, x in e.items() if x == d],
        pseudo_peripheral_vertex(s),
    )
