"""Brute-force reference answers, written without touching the library's algorithms.

Everything here works on plain Python lists and tuples so a bug in the
column store cannot leak into the expected values.
"""

import itertools
import math
from collections import deque

INF = math.inf


def floyd_warshall(n, arcs, directed=True):
    """All-pairs distances; ``arcs`` is a list of (u, v, w) over 0..n-1."""
    d = [[INF] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0.0
    for u, v, w in arcs:
        if w < d[u][v]:
            d[u][v] = w
        if not directed and w < d[v][u]:
            d[v][u] = w
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                x = dik + dk[j]
                if x < di[j]:
                    di[j] = x
    return d


def bfs_hops(n, adj, s):
    """Hop distance from s; ``adj`` maps vertex to an iterable of neighbors."""
    dist = [INF] * n
    dist[s] = 0
    q = deque([s])
    while q:
        v = q.popleft()
        for u in adj[v]:
            if dist[u] == INF:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
    return len({find(x) for x in range(n)})


def min_spanning_forest_weight(n, edges):
    """Minimum over every acyclic edge subset of size n - #components.

    Enumerated by backtracking with cycle pruning; fine for n <= 8.
    """
    target = n - components(n, [(u, v) for u, v, _ in edges])
    best = [INF]
    m = len(edges)

    def rec(i, parent, taken, weight):
        if taken == target:
            best[0] = min(best[0], weight)
            return
        if m - i < target - taken:
            return
        u, v, w = edges[i]

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        a, b = find(u), find(v)
        if a != b:
            p2 = list(parent)
            p2[a] = b
            rec(i + 1, p2, taken + 1, weight + w)
        rec(i + 1, parent, taken, weight)

    rec(0, list(range(n)), 0, 0.0)
    return best[0]


def min_cut_value(n, arcs, s, t):
    """Minimum capacity over all s-t cuts by subset enumeration."""
    others = [v for v in range(n) if v not in (s, t)]
    best = INF
    for r in range(len(others) + 1):
        for side in itertools.combinations(others, r):
            S = set(side) | {s}
            cap = sum(c for u, v, c in arcs if u in S and v not in S)
            best = min(best, cap)
    return best


def max_matching_size(n, edges):
    """Exhaustive recursion over the lowest vertex: leave it or match it."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)

    def rec(free):
        if not free:
            return 0
        v = min(free)
        rest = free - {v}
        best = rec(rest)
        for u in adj[v] & rest:
            best = max(best, 1 + rec(rest - {u}))
        return best

    return rec(frozenset(range(n)))


def maximal_cliques(n, edges):
    """Every vertex subset that is complete and cannot be extended."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    cliques = []
    for mask in range(1, 1 << n):
        S = [v for v in range(n) if mask >> v & 1]
        if all(b in adj[a] for a, b in itertools.combinations(S, 2)):
            cliques.append(frozenset(S))
    out = set()
    for c in cliques:
        if not any(v not in c and c <= adj[v] for v in range(n)):
            out.add(c)
    return out


class DenseModel:
    """Lockstep reference store: vertex set plus a multiplicity dict per ordered pair."""

    def __init__(self, directed, multi, loops):
        self.directed = directed
        self.multi = multi
        self.loops = loops
        self.vertices = []
        self.count = {}
        self.m = 0

    def key(self, v, u):
        if self.directed or v <= u:
            return (v, u)
        return (u, v)

    def add_vertex(self, v):
        self.vertices.append(v)

    def remove_vertex(self, v):
        self.vertices.remove(v)
        for k in [k for k in self.count if v in k]:
            self.m -= self.count.pop(k)

    def can_add(self, v, u):
        if v == u and not self.loops:
            return False
        if not self.multi and self.count.get(self.key(v, u), 0):
            return False
        return True

    def add_edge(self, v, u):
        k = self.key(v, u)
        self.count[k] = self.count.get(k, 0) + 1
        self.m += 1

    def remove_edge(self, v, u):
        k = self.key(v, u)
        self.count[k] -= 1
        if not self.count[k]:
            del self.count[k]
        self.m -= 1

    def contains(self, v, u):
        return self.count.get(self.key(v, u), 0) > 0

    def multiplicity(self, v, u):
        return self.count.get(self.key(v, u), 0)

    def out_degree(self, v):
        d = 0
        for (a, b), c in self.count.items():
            if a == v:
                d += c
            if not self.directed and b == v:
                d += c
        return d

    def in_degree(self, v):
        return sum(c for (a, b), c in self.count.items() if b == v)

    def neighbor_set(self, v):
        out = set()
        for a, b in self.count:
            if a == v:
                out.add(b)
            elif b == v and not self.directed:
                out.add(a)
        return out
