"""Reference backend: one object per vertex and per edge, Python containers throughout.

It exists only to give the column store something to be compared with.
Each vertex owns a growable list of edge objects and a dict from neighbor
to edge for adjacency tests.
"""

from __future__ import annotations

import heapq
import math
from collections import deque


class NaiveEdge:
    __slots__ = ("source", "target", "weight")

    def __init__(self, source, target, weight=1.0):
        self.source = source
        self.target = target
        self.weight = weight

    def other(self, v):
        return self.target if v == self.source else self.source


class NaiveVertex:
    __slots__ = ("id", "out", "inc", "index")

    def __init__(self, vid):
        self.id = vid
        self.out: list[NaiveEdge] = []
        self.inc: list[NaiveEdge] = []
        self.index: dict[int, NaiveEdge] = {}


class NaiveGraph:
    """Simple graph or digraph; undirected edges appear in both endpoint lists."""

    def __init__(self, directed=False):
        self.directed = directed
        self.vertices: dict[int, NaiveVertex] = {}
        self.m = 0

    def add_vertex(self, v):
        if v in self.vertices:
            raise ValueError(f"vertex {v} already exists")
        self.vertices[v] = NaiveVertex(v)

    def add_edge(self, v, u, weight=1.0):
        a = self.vertices[v]
        b = self.vertices[u]
        if v == u:
            raise ValueError("self-loops are not allowed")
        if u in a.index:
            raise ValueError(f"duplicate edge {v}-{u}")
        e = NaiveEdge(v, u, weight)
        a.out.append(e)
        a.index[u] = e
        if self.directed:
            b.inc.append(e)
        else:
            b.out.append(e)
            b.index[v] = e
        self.m += 1
        return e

    def contains_edge(self, v, u):
        return u in self.vertices[v].index

    def remove_edge(self, v, u):
        a = self.vertices[v]
        b = self.vertices[u]
        e = a.index.pop(u)
        a.out.remove(e)
        if self.directed:
            b.inc.remove(e)
        else:
            del b.index[v]
            b.out.remove(e)
        self.m -= 1

    def remove_vertex(self, v):
        a = self.vertices[v]
        for e in list(a.out):
            self.remove_edge(v, e.other(v))
        for e in list(a.inc):
            self.remove_edge(e.source, v)
        del self.vertices[v]

    @property
    def n(self):
        return len(self.vertices)


def from_graph(g) -> NaiveGraph:
    """Copy a column-store simple graph or digraph."""
    out = NaiveGraph(g.kind.directed)
    for v in g.vertices():
        out.add_vertex(v)
    weighted = g.is_edge_weighted()
    for e in g.edges():
        out.add_edge(e.source, e.target, e.weight if weighted else 1.0)
    return out


def complete(n) -> NaiveGraph:
    g = NaiveGraph()
    for v in range(n):
        g.add_vertex(v)
    for v in range(n):
        for u in range(v + 1, n):
            g.add_edge(v, u)
    return g


def regular2k(n, k) -> NaiveGraph:
    g = NaiveGraph()
    for v in range(n):
        g.add_vertex(v)
    for v in range(n):
        for j in range(k):
            g.add_edge(v, (v + j + 1) % n)
    return g


def empty(n) -> NaiveGraph:
    g = NaiveGraph()
    for v in range(n):
        g.add_vertex(v)
    return g


# ------------------------------------------------------------------ algorithms


def dfs_count(g: NaiveGraph, start) -> int:
    """Vertices reached by one full DFS (with restarts), counted as visits."""
    seen = set()
    count = 0
    order = [start] + [v for v in g.vertices if v != start]
    for root in order:
        if root in seen:
            continue
        seen.add(root)
        count += 1
        stack = [(root, iter(g.vertices[root].out))]
        while stack:
            v, it = stack[-1]
            for e in it:
                u = e.other(v) if not g.directed else e.target
                if u not in seen:
                    seen.add(u)
                    count += 1
                    stack.append((u, iter(g.vertices[u].out)))
                    break
            else:
                stack.pop()
    return count


def bfs_count(g: NaiveGraph, start) -> int:
    seen = set()
    count = 0
    order = [start] + [v for v in g.vertices if v != start]
    for root in order:
        if root in seen:
            continue
        seen.add(root)
        q = deque([root])
        while q:
            v = q.popleft()
            count += 1
            for e in g.vertices[v].out:
                u = e.other(v) if not g.directed else e.target
                if u not in seen:
                    seen.add(u)
                    q.append(u)
    return count


def dijkstra(g: NaiveGraph, s) -> dict:
    """Binary heap with lazy deletion."""
    dist = {s: 0.0}
    done = set()
    heap = [(0.0, s)]
    while heap:
        d, v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        for e in g.vertices[v].out:
            u = e.other(v) if not g.directed else e.target
            nd = d + e.weight
            if nd < dist.get(u, math.inf):
                dist[u] = nd
                heapq.heappush(heap, (nd, u))
    return dist


def prim(g: NaiveGraph) -> float:
    total = 0.0
    done = set()
    for root in g.vertices:
        if root in done:
            continue
        heap = [(0.0, root)]
        while heap:
            w, v = heapq.heappop(heap)
            if v in done:
                continue
            done.add(v)
            total += w
            for e in g.vertices[v].out:
                u = e.other(v)
                if u not in done:
                    heapq.heappush(heap, (e.weight, u))
    return total


def kruskal(g: NaiveGraph) -> float:
    edges = []
    for v, vert in g.vertices.items():
        for e in vert.out:
            if e.source == v:
                edges.append(e)
    edges.sort(key=lambda e: (e.weight, min(e.source, e.target), max(e.source, e.target)))
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    total = 0.0
    for e in edges:
        a, b = find(e.source), find(e.target)
        if a != b:
            parent[b] = a
            total += e.weight
    return total


def hopcroft_karp(g: NaiveGraph) -> int:
    """Matching size; sides found by BFS 2-coloring."""
    color = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        q = deque([root])
        while q:
            v = q.popleft()
            for e in g.vertices[v].out:
                u = e.other(v)
                if u not in color:
                    color[u] = 1 - color[v]
                    q.append(u)
                elif color[u] == color[v]:
                    raise ValueError("graph is not bipartite")
    left = [v for v in g.vertices if color[v] == 0]
    adj = {v: [e.other(v) for e in g.vertices[v].out] for v in left}
    mate: dict = {}
    size = 0
    while True:
        dist = {}
        q = deque()
        for v in left:
            if v not in mate:
                dist[v] = 0
                q.append(v)
        found = False
        while q:
            v = q.popleft()
            for u in adj[v]:
                w = mate.get(u)
                if w is None:
                    found = True
                elif w not in dist:
                    dist[w] = dist[v] + 1
                    q.append(w)
        if not found:
            return size

        def augment(v):
            for u in adj[v]:
                w = mate.get(u)
                if w is None or (dist.get(w) == dist[v] + 1 and augment(w)):
                    mate[u] = v
                    mate[v] = u
                    return True
            dist[v] = math.inf
            return False

        for v in left:
            if v not in mate and augment(v):
                size += 1
