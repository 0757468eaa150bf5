"""Compiled inner loops over CSR snapshots.

All kernels take ``offsets`` (int64, n+1), ``targets`` (int32 positions) and,
where needed, ``weights`` (float64) as produced by ``Graph.csr()``. Work
arrays are passed in so repeated calls (one per source) do not allocate.
"""

import numpy as np
from numba import njit

INF = np.inf


@njit(cache=True)
def _sift_down(hkey, hv, hpos, size, i, key, v):
    while True:
        c = 2 * i + 1
        if c >= size:
            break
        ck = hkey[c]
        if c + 1 < size and hkey[c + 1] < ck:
            c += 1
            ck = hkey[c]
        if ck < key:
            hkey[i] = ck
            hv[i] = hv[c]
            hpos[hv[i]] = i
            i = c
        else:
            break
    hkey[i] = key
    hv[i] = v
    hpos[v] = i


@njit(cache=True)
def _sift_up(hkey, hv, hpos, i, key, v):
    while i > 0:
        p = (i - 1) >> 1
        pk = hkey[p]
        if pk > key:
            hkey[i] = pk
            hv[i] = hv[p]
            hpos[hv[i]] = i
            i = p
        else:
            break
    hkey[i] = key
    hv[i] = v
    hpos[v] = i


@njit(cache=True)
def dijkstra_heap(offsets, targets, weights, s, dist, parent, hkey, hv, hpos):
    """Indexed binary heap with decrease-key; returns the number of settled vertices.

    ``hpos[v]`` is -1 before discovery, the heap slot while queued and -2
    once settled.
    """
    n = offsets.shape[0] - 1
    for i in range(n):
        dist[i] = INF
        parent[i] = -1
        hpos[i] = -1
    dist[s] = 0.0
    hkey[0] = 0.0
    hv[0] = s
    hpos[s] = 0
    size = 1
    settled = 0
    while size > 0:
        v = hv[0]
        dv = hkey[0]
        size -= 1
        hpos[v] = -2
        settled += 1
        if size > 0:
            _sift_down(hkey, hv, hpos, size, 0, hkey[size], hv[size])
        for k in range(offsets[v], offsets[v + 1]):
            u = targets[k]
            nd = dv + weights[k]
            # settled vertices can never improve with non-negative weights
            if nd < dist[u]:
                dist[u] = nd
                parent[u] = v
                pu = hpos[u]
                if pu == -1:
                    i = size
                    size += 1
                else:
                    i = pu
                _sift_up(hkey, hv, hpos, i, nd, u)
    return settled


@njit(cache=True)
def dijkstra_array(offsets, targets, weights, s, dist, parent, done):
    """O(n^2) variant: linear scan for the closest unsettled vertex."""
    n = offsets.shape[0] - 1
    for i in range(n):
        dist[i] = INF
        parent[i] = -1
        done[i] = False
    dist[s] = 0.0
    settled = 0
    for _ in range(n):
        v = -1
        best = INF
        for i in range(n):
            if not done[i] and dist[i] < best:
                best = dist[i]
                v = i
        if v < 0:
            break
        done[v] = True
        settled += 1
        for k in range(offsets[v], offsets[v + 1]):
            u = targets[k]
            nd = best + weights[k]
            if nd < dist[u]:
                dist[u] = nd
                parent[u] = v
    return settled


@njit(cache=True)
def bellman_ford(offsets, targets, weights, s, dist, parent):
    """Returns -1, or a vertex lying on a negative cycle reachable from ``s``."""
    n = offsets.shape[0] - 1
    for i in range(n):
        dist[i] = INF
        parent[i] = -1
    dist[s] = 0.0
    for _ in range(max(n - 1, 0)):
        changed = False
        for v in range(n):
            dv = dist[v]
            if dv == INF:
                continue
            for k in range(offsets[v], offsets[v + 1]):
                u = targets[k]
                nd = dv + weights[k]
                if nd < dist[u]:
                    dist[u] = nd
                    parent[u] = v
                    changed = True
        if not changed:
            return -1
    for v in range(n):
        dv = dist[v]
        if dv == INF:
            continue
        for k in range(offsets[v], offsets[v + 1]):
            u = targets[k]
            if dv + weights[k] < dist[u]:
                parent[u] = v
                x = u
                for _ in range(n):
                    x = parent[x]
                return x
    return -1


@njit(cache=True)
def bfs_levels(offsets, targets, s, level, queue):
    """Hop distance from ``s`` into ``level`` (-1 unreachable); returns vertices reached."""
    n = offsets.shape[0] - 1
    for i in range(n):
        level[i] = -1
    level[s] = 0
    queue[0] = s
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        lv = level[v] + 1
        for k in range(offsets[v], offsets[v + 1]):
            u = targets[k]
            if level[u] < 0:
                level[u] = lv
                queue[tail] = u
                tail += 1
    return tail


@njit(cache=True)
def all_pairs_hops(offsets, targets):
    n = offsets.shape[0] - 1
    out = np.empty((n, n), dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    level = np.empty(n, dtype=np.int32)
    for s in range(n):
        bfs_levels(offsets, targets, s, level, queue)
        out[s, :] = level
    return out


@njit(cache=True)
def girth(offsets, targets):
    """Shortest cycle length of a simple undirected graph, 0 when acyclic."""
    n = offsets.shape[0] - 1
    level = np.empty(n, dtype=np.int32)
    par = np.empty(n, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    best = 0
    for s in range(n):
        for i in range(n):
            level[i] = -1
        level[s] = 0
        par[s] = -1
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = queue[head]
            head += 1
            if best > 0 and 2 * level[v] + 1 >= best:
                break
            for k in range(offsets[v], offsets[v + 1]):
                u = targets[k]
                if level[u] < 0:
                    level[u] = level[v] + 1
                    par[u] = v
                    queue[tail] = u
                    tail += 1
                elif par[v] != u:
                    c = level[u] + level[v] + 1
                    if best == 0 or c < best:
                        best = c
    return best


@njit(cache=True)
def prim_forest(offsets, targets, weights, parent, key, hkey, hv, hpos):
    """Minimum spanning forest; each tree grows from its lowest-index vertex.

    Returns the total weight; ``parent[v]`` is -1 for roots.
    """
    n = offsets.shape[0] - 1
    for i in range(n):
        key[i] = INF
        parent[i] = -1
        hpos[i] = -1
    total = 0.0
    for root in range(n):
        if hpos[root] != -1:
            continue
        key[root] = 0.0
        hkey[0] = 0.0
        hv[0] = root
        hpos[root] = 0
        size = 1
        while size > 0:
            v = hv[0]
            total += hkey[0]
            size -= 1
            hpos[v] = -2
            if size > 0:
                _sift_down(hkey, hv, hpos, size, 0, hkey[size], hv[size])
            for k in range(offsets[v], offsets[v + 1]):
                u = targets[k]
                w = weights[k]
                if hpos[u] != -2 and w < key[u]:
                    key[u] = w
                    parent[u] = v
                    pu = hpos[u]
                    if pu == -1:
                        i = size
                        size += 1
                    else:
                        i = pu
                    _sift_up(hkey, hv, hpos, i, w, u)
    return total


@njit(cache=True)
def _find(parent, x):
    # path halving
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def kruskal_select(n, src, dst, order):
    """Scan edges in ``order`` with union-find; returns a mask of tree edges."""
    parent = np.arange(n)
    rank = np.zeros(n, dtype=np.int8)
    chosen = np.zeros(src.shape[0], dtype=np.bool_)
    taken = 0
    for t in range(order.shape[0]):
        if taken == n - 1:
            break
        e = order[t]
        a = _find(parent, src[e])
        b = _find(parent, dst[e])
        if a == b:
            continue
        if rank[a] < rank[b]:
            a, b = b, a
        parent[b] = a
        if rank[a] == rank[b]:
            rank[a] += 1
        chosen[e] = True
        taken += 1
    return chosen


@njit(cache=True)
def dfs_full(offsets, targets, start, order, visited, stack, cursor):
    """Full DFS preorder with restarts; writes positions into ``order``, returns the count."""
    n = offsets.shape[0] - 1
    for i in range(n):
        visited[i] = False
    count = 0
    for r in range(-1, n):
        root = start if r < 0 else r
        if visited[root]:
            continue
        visited[root] = True
        order[count] = root
        count += 1
        top = 0
        stack[0] = root
        cursor[0] = offsets[root]
        while top >= 0:
            v = stack[top]
            k = cursor[top]
            end = offsets[v + 1]
            while k < end and visited[targets[k]]:
                k += 1
            if k == end:
                top -= 1
                continue
            cursor[top] = k + 1
            u = targets[k]
            visited[u] = True
            order[count] = u
            count += 1
            top += 1
            stack[top] = u
            cursor[top] = offsets[u]
    return count


@njit(cache=True)
def bfs_full(offsets, targets, start, order, level):
    """Full BFS with restarts; ``order`` doubles as the queue. Returns the count."""
    n = offsets.shape[0] - 1
    for i in range(n):
        level[i] = -1
    tail = 0
    head = 0
    for r in range(-1, n):
        root = start if r < 0 else r
        if level[root] >= 0:
            continue
        level[root] = 0
        order[tail] = root
        tail += 1
        while head < tail:
            v = order[head]
            head += 1
            for k in range(offsets[v], offsets[v + 1]):
                u = targets[k]
                if level[u] < 0:
                    level[u] = level[v] + 1
                    order[tail] = u
                    tail += 1
    return tail
