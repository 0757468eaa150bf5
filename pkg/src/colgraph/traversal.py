"""Depth-first and breadth-first search, as iterators and as visitor-driven traversers.

Neighbors are expanded in adjacency-slot order (successors for digraphs).
When a search tree is exhausted the search restarts from the lowest-index
unvisited vertex and the component counter is incremented.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .collections import VertexQueue


@dataclass(eq=False)
class SearchNode:
    """Visit record of one vertex in a DFS or BFS forest."""

    vertex: int
    parent: Optional["SearchNode"]
    level: int
    order: int
    component: int

    def root(self) -> "SearchNode":
        node = self
        while node.parent is not None:
            node = node.parent
        return node

    def is_ancestor_of(self, other: "SearchNode") -> bool:
        """True when ``self`` lies on the tree path from ``other`` to its root."""
        node = other
        while node is not None and node.level >= self.level:
            if node is self:
                return True
            node = node.parent
        return False

    def path_from_root(self) -> list[int]:
        out = []
        node = self
        while node is not None:
            out.append(node.vertex)
            node = node.parent
        out.reverse()
        return out

    def __repr__(self):
        p = None if self.parent is None else self.parent.vertex
        return f"SearchNode(v={self.vertex}, parent={p}, level={self.level}, order={self.order}, comp={self.component})"


def _start_order(g, start):
    n = g.num_vertices
    if start is not None:
        first = g._idx(start)
        yield first
        for a in range(n):
            if a != first:
                yield a
    else:
        yield from range(n)


class DFSIterator:
    """Pull-style DFS in preorder; each vertex is yielded exactly once."""

    def __init__(self, g, start: int | None = None):
        self._g = g
        self._nodes: list[SearchNode | None] = [None] * g.num_vertices
        self._roots = _start_order(g, start)
        self._stack: list = []
        self._count = 0
        self._component = -1

    def __iter__(self):
        return self

    def node(self, v: int) -> SearchNode | None:
        return self._nodes[self._g._idx(v)]

    def _visit(self, a, parent):
        g = self._g
        level = 0 if parent is None else parent.level + 1
        node = SearchNode(g._vertices[a], parent, level, self._count, self._component)
        self._count += 1
        self._nodes[a] = node
        self._stack.append((a, node, 0))
        return node

    def __next__(self) -> SearchNode:
        g = self._g
        nodes = self._nodes
        stack = self._stack
        adj, deg = g._adj, g._deg
        while stack:
            a, node, i = stack[-1]
            row = adj[a]
            d = deg[a]
            while i < d:
                b = g._idx(row[i])
                i += 1
                if nodes[b] is None:
                    stack[-1] = (a, node, i)
                    return self._visit(b, node)
            stack.pop()
        for a in self._roots:
            if nodes[a] is None:
                self._component += 1
                return self._visit(a, None)
        raise StopIteration


class BFSIterator:
    """Pull-style BFS; ``level`` is the hop distance from the tree root."""

    def __init__(self, g, start: int | None = None):
        self._g = g
        self._nodes: list[SearchNode | None] = [None] * g.num_vertices
        self._roots = _start_order(g, start)
        self._queue = VertexQueue()
        self._count = 0
        self._component = -1

    def __iter__(self):
        return self

    def node(self, v: int) -> SearchNode | None:
        return self._nodes[self._g._idx(v)]

    def _discover(self, a, parent):
        level = 0 if parent is None else parent.level + 1
        node = SearchNode(self._g._vertices[a], parent, level, self._count, self._component)
        self._count += 1
        self._nodes[a] = node
        self._queue.offer(a)

    def __next__(self) -> SearchNode:
        g = self._g
        nodes = self._nodes
        q = self._queue
        if q.is_empty():
            for a in self._roots:
                if nodes[a] is None:
                    self._component += 1
                    self._discover(a, None)
                    break
            else:
                raise StopIteration
        a = q.poll()
        node = nodes[a]
        row = g._adj[a]
        for i in range(g._deg[a]):
            b = g._idx(row[i])
            if nodes[b] is None:
                self._discover(b, node)
        return node


def dfs(g, start: int | None = None) -> DFSIterator:
    return DFSIterator(g, start)


def bfs(g, start: int | None = None) -> BFSIterator:
    return BFSIterator(g, start)


class SearchVisitor:
    """Callbacks invoked by :class:`DFSTraverser` and :class:`BFSTraverser`.

    Override the ones you need; all default to no-ops. Edge callbacks get
    the two endpoint nodes. Call :meth:`interrupt` from any callback to stop
    the traversal after that callback returns.
    """

    _interrupted = False

    def interrupt(self):
        self._interrupted = True

    @property
    def interrupted(self) -> bool:
        return self._interrupted

    def start_vertex(self, node: SearchNode):
        pass

    def finish_vertex(self, node: SearchNode):
        pass

    def tree_edge(self, source: SearchNode, target: SearchNode):
        pass

    def back_edge(self, source: SearchNode, target: SearchNode):
        pass

    def forward_edge(self, source: SearchNode, target: SearchNode):
        pass

    def cross_edge(self, source: SearchNode, target: SearchNode):
        pass

    def upward(self, source: SearchNode, target: SearchNode):
        pass


class _Interrupted(Exception):
    pass


class DFSTraverser:
    """Push-style DFS with edge classification.

    Digraphs: every arc is reported once as tree, back, forward or cross.
    Undirected graphs: every edge is reported once, as tree or back; the
    parent edge is skipped from the child side (one cell for parallel
    copies) and a self-loop is reported once, as back.
    """

    def __init__(self, g):
        self.g = g
        self.nodes: list[SearchNode | None] = []

    def node(self, v: int) -> SearchNode | None:
        return self.nodes[self.g._idx(v)]

    def traverse(self, visitor: SearchVisitor, start: int | None = None) -> None:
        g = self.g
        n = g.num_vertices
        self.nodes = nodes = [None] * n
        finished = bytearray(n)
        visitor._interrupted = False
        directed = g.kind.directed
        adj, deg, pos = g._adj, g._deg, g._pos
        count = 0
        component = -1

        def fire(cb, *args):
            cb(*args)
            if visitor._interrupted:
                raise _Interrupted

        try:
            for root in _start_order(g, start):
                if nodes[root] is not None:
                    continue
                component += 1
                node = SearchNode(g._vertices[root], None, 0, count, component)
                count += 1
                nodes[root] = node
                fire(visitor.start_vertex, node)
                # frames: (position, node, next slot, slot used to arrive from parent)
                stack = [[root, node, 0, -1]]
                while stack:
                    frame = stack[-1]
                    a, node, i, via = frame
                    row = adj[a]
                    if i < deg[a]:
                        frame[2] = i + 1
                        u = row[i]
                        b = g._idx(u)
                        target = nodes[b]
                        if target is None:
                            child = SearchNode(u, node, node.level + 1, count, component)
                            count += 1
                            nodes[b] = child
                            fire(visitor.tree_edge, node, child)
                            fire(visitor.start_vertex, child)
                            stack.append([b, child, 0, -1 if directed else pos[a][i]])
                        elif directed:
                            if not finished[b]:
                                fire(visitor.back_edge, node, target)
                            elif target.order > node.order:
                                fire(visitor.forward_edge, node, target)
                            else:
                                fire(visitor.cross_edge, node, target)
                        elif i == via:
                            continue
                        elif b == a:
                            if i < pos[a][i]:
                                fire(visitor.back_edge, node, node)
                        elif target.order < node.order and not finished[b]:
                            fire(visitor.back_edge, node, target)
                        continue
                    stack.pop()
                    finished[a] = 1
                    fire(visitor.finish_vertex, node)
        except _Interrupted:
            return


class BFSTraverser:
    """Push-style BFS with edge classification.

    Tree edges are first discoveries. Undirected graphs: every non-tree edge
    is reported once as cross. Digraphs: a non-tree arc to an ancestor in
    the same tree is a back edge; to another vertex of strictly lower level
    it goes to ``upward``; everything else is cross.
    """

    def __init__(self, g):
        self.g = g
        self.nodes: list[SearchNode | None] = []

    def node(self, v: int) -> SearchNode | None:
        return self.nodes[self.g._idx(v)]

    def traverse(self, visitor: SearchVisitor, start: int | None = None) -> None:
        g = self.g
        n = g.num_vertices
        self.nodes = nodes = [None] * n
        visitor._interrupted = False
        directed = g.kind.directed
        adj, deg, pos = g._adj, g._deg, g._pos
        expanded = bytearray(n)
        count = 0
        component = -1
        q = VertexQueue()

        def fire(cb, *args):
            cb(*args)
            if visitor._interrupted:
                raise _Interrupted

        try:
            for root in _start_order(g, start):
                if nodes[root] is not None:
                    continue
                component += 1
                nodes[root] = SearchNode(g._vertices[root], None, 0, count, component)
                count += 1
                fire(visitor.start_vertex, nodes[root])
                q.offer(root)
                while not q.is_empty():
                    a = q.poll()
                    node = nodes[a]
                    row = adj[a]
                    for i in range(deg[a]):
                        u = row[i]
                        b = g._idx(u)
                        target = nodes[b]
                        if target is None:
                            child = SearchNode(u, node, node.level + 1, count, component)
                            count += 1
                            nodes[b] = child
                            fire(visitor.tree_edge, node, child)
                            fire(visitor.start_vertex, child)
                            q.offer(b)
                        elif directed:
                            if target.component == node.component and target.is_ancestor_of(node):
                                fire(visitor.back_edge, node, target)
                            elif target.component == node.component and target.level < node.level:
                                fire(visitor.upward, node, target)
                            else:
                                fire(visitor.cross_edge, node, target)
                        elif b == a:
                            if i < pos[a][i]:
                                fire(visitor.cross_edge, node, target)
                        elif not expanded[b]:
                            # a parent is expanded before its children, so each
                            # edge is seen here from its first expanded endpoint
                            fire(visitor.cross_edge, node, target)
                    expanded[a] = 1
                    fire(visitor.finish_vertex, node)
        except _Interrupted:
            return


def dfs_traverse(g, visitor: SearchVisitor, start: int | None = None) -> DFSTraverser:
    t = DFSTraverser(g)
    t.traverse(visitor, start)
    return t


def bfs_traverse(g, visitor: SearchVisitor, start: int | None = None) -> BFSTraverser:
    t = BFSTraverser(g)
    t.traverse(visitor, start)
    return t


def visit_orders(it: Iterator[SearchNode]) -> list[int]:
    return [node.vertex for node in it]
