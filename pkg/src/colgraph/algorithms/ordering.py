"""Topological sorting, acyclic orientation and cycle detection."""

from __future__ import annotations

import heapq

import numpy as np

from ..collections import Cycle
from ..core.kinds import DIGRAPH, DIRECTED_MULTIGRAPH
from ..errors import NotAcyclicError, UnsupportedKindError
from ..transforms import EdgeTable, _rebuild
from .applicability import DIGRAPH_ONLY, prepare


def topological_sort(g) -> list[int]:
    """Kahn's algorithm; among ready vertices the lowest internal index goes first.

    Raises :class:`NotAcyclicError` carrying a cycle when ``g`` is not a DAG.
    """
    g = prepare(g, DIGRAPH_ONLY)
    csr = g.csr()
    off = csr.offsets.tolist()
    tgt = csr.targets.tolist()
    n = csr.num_vertices
    indeg = np.bincount(csr.targets, minlength=n).tolist()
    ready = [a for a in range(n) if indeg[a] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for k in range(off[v], off[v + 1]):
            u = tgt[k]
            indeg[u] -= 1
            if indeg[u] == 0:
                heapq.heappush(ready, u)
    if len(order) < n:
        raise NotAcyclicError(find_cycle(g))
    ids = csr.ids.tolist()
    return [ids[a] for a in order]


def is_acyclic(g) -> bool:
    return find_cycle(g) is None


def acyclic_orientation(g, order=None):
    """Orient every edge from the earlier to the later vertex of ``order``.

    ``order`` defaults to increasing vertex id. Parallel edges stay parallel
    arcs; self-loops cannot be oriented acyclically and are rejected.
    """
    if g.kind.directed:
        raise UnsupportedKindError("acyclic orientation needs an undirected graph")
    ids = g.vertices()
    rank = {v: i for i, v in enumerate(sorted(ids) if order is None else order)}
    if len(rank) != len(ids) or set(rank) != set(ids):
        raise ValueError("order must list every vertex exactly once")
    t = EdgeTable(g)
    src = t.src.tolist()
    dst = t.dst.tolist()
    if any(a == b for a, b in zip(src, dst)):
        raise ValueError("a self-loop has no acyclic orientation")
    for i, (a, b) in enumerate(zip(src, dst)):
        if rank[a] > rank[b]:
            src[i], dst[i] = b, a
    kind = DIRECTED_MULTIGRAPH if g.kind.allows_multiple_edges else DIGRAPH
    return _rebuild(kind, ids, src, dst, t.weights, t.labels, name=getattr(g, "name", None), vertex_source=g)


def find_cycle(g) -> Cycle | None:
    """A cycle found at the first DFS back edge, or None.

    In undirected graphs the tree edge back to the parent does not count, but
    a parallel copy of it does (a 2-cycle) and a self-loop is a 1-cycle.
    """
    n = g.num_vertices
    directed = g.kind.directed
    adj, deg = g._adj, g._deg
    mirror = None if directed else g._pos
    idx = g._idx
    ids = g._vertices
    state = bytearray(n)  # 0 new, 1 on stack, 2 done
    parent = [-1] * n
    via = [-1] * n
    for root in range(n):
        if state[root]:
            continue
        state[root] = 1
        stack = [[root, 0]]
        while stack:
            frame = stack[-1]
            a, i = frame
            if i == deg[a]:
                state[a] = 2
                stack.pop()
                continue
            frame[1] = i + 1
            if not directed and i == via[a]:
                continue
            b = idx(adj[a][i])
            if state[b] == 0:
                state[b] = 1
                parent[b] = a
                via[b] = -1 if directed else mirror[a][i]
                stack.append([b, 0])
            elif state[b] == 1:
                walk = [a]
                x = a
                while x != b:
                    x = parent[x]
                    walk.append(x)
                walk.reverse()
                return Cycle([ids[x] for x in walk])
    return None


contains_cycle = find_cycle
