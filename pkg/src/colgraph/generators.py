"""Deterministic and random graph families.

All random generators take ``seed`` as an int or a ``numpy.random.Generator``;
the same parameters and seed always give the same graph. Unordered pairs
``{i, j}`` with ``i < j`` are linearized as ``k = j(j-1)/2 + i``, which lets
the samplers work on plain integer ranges.
"""

from __future__ import annotations

import heapq
import math

import numpy as np

from .core.graph import Graph, graph_class
from .core.kinds import DIGRAPH, GRAPH, GraphKind

DEFAULT_SEED = 0x5EED
_CHUNK = 1 << 22


def rng_from(seed=None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def _require(cond, msg):
    if not cond:
        raise ValueError(msg)


def _num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def decode_pairs(k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of ``k = j(j-1)/2 + i`` for ``0 <= i < j``."""
    k = np.asarray(k, dtype=np.int64)
    j = ((1 + np.sqrt(1 + 8 * k.astype(np.float64))) // 2).astype(np.int64)
    # float rounding can be off by one for large k
    j -= (j * (j - 1) // 2 > k).astype(np.int64)
    j += ((j + 1) * j // 2 <= k).astype(np.int64)
    i = k - j * (j - 1) // 2
    return i, j


def encode_pairs(i, j) -> np.ndarray:
    i = np.asarray(i, dtype=np.int64)
    j = np.asarray(j, dtype=np.int64)
    lo, hi = np.minimum(i, j), np.maximum(i, j)
    return hi * (hi - 1) // 2 + lo


def _draw_weights(count, weights, rng):
    """``weights`` is None, a ``(low, high)`` real range, or ``("int", low, high)``."""
    if weights is None:
        return None
    if isinstance(weights, tuple) and len(weights) == 3 and weights[0] == "int":
        _, lo, hi = weights
        return rng.integers(lo, hi, size=count, endpoint=True).astype(np.float64)
    lo, hi = weights
    return rng.uniform(lo, hi, size=count)


def _assemble(kind: GraphKind, n: int, src, dst, weights=None, name=None, trusted=True) -> Graph:
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    g = graph_class(kind)(name=name, vertex_capacity=n)
    if n:
        cap = None
        if len(src):
            cells = len(src) if kind.directed else 2 * len(src)
            cap = max(1, math.ceil(cells / n))
        g._add_default_vertices(n, cap)
    if len(src):
        g._bulk_add_edges(src, dst, weights, None, trusted=trusted)
    return g


# ------------------------------------------------------------ deterministic


def empty(n: int, kind: GraphKind = GRAPH) -> Graph:
    _require(n >= 0, "n must be non-negative")
    return _assemble(kind, n, [], [], name=f"E{n}")


def complete(n: int, weights=None, seed=None) -> Graph:
    _require(n >= 0, "n must be non-negative")
    i, j = np.triu_indices(n, 1)
    rng = rng_from(seed) if weights is not None else None
    return _assemble(GRAPH, n, i, j, _draw_weights(len(i), weights, rng), name=f"K{n}")


def complete_digraph(n: int) -> Graph:
    _require(n >= 0, "n must be non-negative")
    v = np.repeat(np.arange(n), n)
    u = np.tile(np.arange(n), n)
    keep = v != u
    return _assemble(DIGRAPH, n, v[keep], u[keep], name=f"DK{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 0 and b >= 0, "part sizes must be non-negative")
    v = np.repeat(np.arange(a), b)
    u = np.tile(np.arange(a, a + b), a)
    return _assemble(GRAPH, a + b, v, u, name=f"K{a},{b}")


def path(n: int) -> Graph:
    _require(n >= 0, "n must be non-negative")
    v = np.arange(max(n - 1, 0))
    return _assemble(GRAPH, n, v, v + 1, name=f"P{n}")


def cycle(n: int) -> Graph:
    _require(n >= 3, "a cycle needs at least 3 vertices")
    v = np.arange(n)
    return _assemble(GRAPH, n, v, (v + 1) % n, name=f"C{n}")


def star(n: int) -> Graph:
    """Center 0 joined to leaves ``1 .. n-1``."""
    _require(n >= 1, "a star needs at least 1 vertex")
    leaves = np.arange(1, n)
    return _assemble(GRAPH, n, np.zeros(n - 1, dtype=np.int64), leaves, name=f"S{n}")


def wheel(n: int) -> Graph:
    """Hub 0 joined to every vertex of the cycle ``1 .. n-1``."""
    _require(n >= 4, "a wheel needs at least 4 vertices")
    rim = np.arange(1, n)
    nxt = np.roll(rim, -1)
    src = np.concatenate([np.zeros(n - 1, dtype=np.int64), rim])
    dst = np.concatenate([rim, nxt])
    return _assemble(GRAPH, n, src, dst, name=f"W{n}")


def regular2k(n: int, k: int, weights=None, seed=None) -> Graph:
    """Circulant graph: ``v`` joined to ``(v + j + 1) mod n`` for ``j`` in ``0 .. k-1``."""
    _require(k >= 1 and n > 2 * k, "need n > 2k >= 2")
    v = np.tile(np.arange(n), k)
    j = np.repeat(np.arange(k), n)
    u = (v + j + 1) % n
    rng = rng_from(seed) if weights is not None else None
    return _assemble(GRAPH, n, v, u, _draw_weights(len(v), weights, rng), name=f"R{n},{2 * k}")


# ------------------------------------------------------------------ random


def prufer_decode(seq, n: int) -> tuple[list[int], list[int]]:
    """Edges of the labeled tree on ``0 .. n-1`` encoded by a Prüfer sequence."""
    seq = list(seq)
    _require(len(seq) == max(n - 2, 0), "Prüfer sequence must have n-2 entries")
    if n < 2:
        return [], []
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    src, dst = [], []
    for x in seq:
        leaf = heapq.heappop(leaves)
        src.append(leaf)
        dst.append(x)
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    src.append(a)
    dst.append(b)
    return src, dst


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labeled tree via a uniform Prüfer sequence."""
    _require(n >= 0, "n must be non-negative")
    rng = rng_from(seed)
    seq = rng.integers(0, n, size=max(n - 2, 0)).tolist() if n > 2 else []
    src, dst = prufer_decode(seq, n)
    return _assemble(GRAPH, n, src, dst, name=f"T{n}")


def sample_distinct(total: int, count: int, rng) -> np.ndarray:
    """``count`` distinct integers from ``0 .. total-1``, uniformly, sorted.

    Rejection sampling in batches: draw, drop values already taken, repeat.
    Above 60% density the complement is sampled instead.
    """
    _require(0 <= count <= total, "count out of range")
    if count == 0:
        return np.empty(0, dtype=np.int64)
    if count > 0.6 * total:
        excluded = sample_distinct(total, total - count, rng)
        keep = np.ones(total, dtype=bool)
        keep[excluded] = False
        return np.flatnonzero(keep).astype(np.int64)
    chosen = np.empty(0, dtype=np.int64)
    while len(chosen) < count:
        need = count - len(chosen)
        draw = rng.integers(0, total, size=need + need // 8 + 16)
        _, first = np.unique(draw, return_index=True)
        fresh = draw[np.sort(first)]
        fresh = fresh[~np.isin(fresh, chosen)][:need]
        chosen = np.concatenate([chosen, fresh])
    return np.sort(chosen)


def gnm_pairs(n: int, m: int, rng) -> np.ndarray:
    total = _num_pairs(n)
    _require(0 <= m <= total, f"m must be in 0..{total}")
    return sample_distinct(total, m, rng)


def gnm(n: int, m: int, seed=None, weights=None) -> Graph:
    """Uniform random graph with exactly ``m`` edges."""
    _require(n >= 0, "n must be non-negative")
    rng = rng_from(seed)
    i, j = decode_pairs(gnm_pairs(n, m, rng))
    return _assemble(GRAPH, n, i, j, _draw_weights(len(i), weights, rng), name=f"G({n},{m})")


def bernoulli_indices(total: int, p: float, rng) -> np.ndarray:
    """Indices ``k < total`` each kept independently with probability ``p``.

    For small ``p`` the gaps between kept indices are drawn from a geometric
    distribution instead of flipping a coin per index.
    """
    _require(0.0 <= p <= 1.0, "p must be in [0, 1]")
    if total == 0 or p == 0.0:
        return np.empty(0, dtype=np.int64)
    if p == 1.0:
        return np.arange(total, dtype=np.int64)
    if p < 0.1:
        return _geometric_skip(total, p, rng)
    parts = []
    for lo in range(0, total, _CHUNK):
        hi = min(total, lo + _CHUNK)
        parts.append(lo + np.flatnonzero(rng.random(hi - lo) < p))
    return np.concatenate(parts).astype(np.int64)


def _geometric_skip(total, p, rng):
    parts = []
    pos = -1
    batch = max(int(total * p * 1.1) + 64, 64)
    while True:
        gaps = rng.geometric(p, size=batch)
        idx = pos + np.cumsum(gaps)
        inside = idx[idx < total]
        parts.append(inside)
        if len(inside) < len(idx):
            break
        pos = int(idx[-1])
        batch = max(int((total - pos) * p * 1.1) + 64, 64)
    return np.concatenate(parts).astype(np.int64)


def gnp(n: int, p: float, seed=None, weights=None) -> Graph:
    """Each of the ``n(n-1)/2`` pairs is an edge independently with probability ``p``."""
    _require(n >= 0, "n must be non-negative")
    rng = rng_from(seed)
    i, j = decode_pairs(bernoulli_indices(_num_pairs(n), p, rng))
    return _assemble(GRAPH, n, i, j, _draw_weights(len(i), weights, rng), name=f"G({n},{p})")


def random_digraph_gnp(n: int, p: float, seed=None, weights=None) -> Graph:
    """Each ordered pair ``(v, u)``, ``v != u``, is an arc with probability ``p``."""
    _require(n >= 0, "n must be non-negative")
    rng = rng_from(seed)
    k = bernoulli_indices(n * (n - 1), p, rng)
    if n > 1:
        v, r = np.divmod(k, n - 1)
        u = r + (r >= v)
    else:
        v = u = k
    return _assemble(DIGRAPH, n, v, u, _draw_weights(len(k), weights, rng), name=f"D({n},{p})")


def random_digraph_gnm(n: int, m: int, seed=None, weights=None) -> Graph:
    """Uniform random digraph with exactly ``m`` arcs and no loops."""
    _require(n >= 0, "n must be non-negative")
    rng = rng_from(seed)
    k = sample_distinct(n * (n - 1), m, rng)
    if n > 1:
        v, r = np.divmod(k, n - 1)
        u = r + (r >= v)
    else:
        v = u = k
    return _assemble(DIGRAPH, n, v, u, _draw_weights(len(k), weights, rng), name=f"D({n},{m})")


def random_tournament(n: int, seed=None, weights=None) -> Graph:
    """Orientation of ``K_n`` with a fair coin per pair."""
    _require(n >= 1, "a tournament needs at least 1 vertex")
    rng = rng_from(seed)
    i, j = np.triu_indices(n, 1)
    flip = rng.random(len(i)) < 0.5
    v = np.where(flip, j, i)
    u = np.where(flip, i, j)
    return _assemble(DIGRAPH, n, v, u, _draw_weights(len(i), weights, rng), name=f"T({n})")


def random_bipartite_gnp(n: int, p: float, seed=None, weights=None) -> Graph:
    """Parts ``0 .. n/2-1`` and ``n/2 .. n-1``; each cross pair kept with probability ``p``."""
    _require(n >= 0 and n % 2 == 0, "n must be even")
    rng = rng_from(seed)
    h = n // 2
    k = bernoulli_indices(h * h, p, rng)
    v, u = np.divmod(k, h) if h else (k, k)
    return _assemble(GRAPH, n, v, u + h, _draw_weights(len(k), weights, rng), name=f"B({n},{p})")


def random_flow_network(n: int, p: float, seed=None, capacity=(1, 100)) -> Graph:
    """Random digraph with integer capacities; source 0 and sink ``n-1``."""
    if not (isinstance(capacity, tuple) and len(capacity) == 3):
        capacity = ("int", capacity[0], capacity[1])
    return random_digraph_gnp(n, p, seed, weights=capacity)


FAMILIES = {
    "complete": complete,
    "path": path,
    "cycle": cycle,
    "star": star,
    "wheel": wheel,
    "random-tree": random_tree,
    "regular": regular2k,
    "gnm": gnm,
    "gnp": gnp,
    "digraph-gnp": random_digraph_gnp,
    "digraph-gnm": random_digraph_gnm,
    "tournament": random_tournament,
    "bipartite-gnp": random_bipartite_gnp,
}
