"""Maximum cardinality bipartite matching by Hopcroft-Karp."""

from __future__ import annotations

from ..collections import Matching, VertexQueue, VertexStack
from .applicability import SimpleGraphAlgorithm
from .connectivity import bipartition

_INF = 1 << 30


class HopcroftKarp(SimpleGraphAlgorithm):
    """Level BFS from every free left vertex, then vertex-disjoint shortest
    augmenting paths by DFS along the levels. O(m sqrt n).

    The sides come from a BFS 2-coloring (color 0 is the left side), so an
    odd cycle raises :class:`NotBipartiteError`. When ``certify`` is set one
    extra alternating BFS confirms that no augmenting path is left.
    """

    def __init__(self, graph, certify: bool = True):
        super().__init__(graph)
        self.certify = certify
        self.phases = 0

    def run(self) -> Matching:
        g = self.graph
        color = bipartition(g)
        csr = g.csr()
        n = csr.num_vertices
        off = csr.offsets.tolist()
        tgt = csr.targets.tolist()
        ids = csr.ids.tolist()
        rows = [tgt[off[a] : off[a + 1]] for a in range(n)]
        left = [a for a in range(n) if color[ids[a]] == 0]
        mate = [-1] * n
        dist = [_INF] * n
        cursor = [0] * n
        chosen = [0] * n
        while True:
            limit = self._levels(rows, left, mate, dist)
            if limit == _INF:
                break
            self.phases += 1
            for a in left:
                cursor[a] = 0
            for a in left:
                if mate[a] < 0:
                    self._augment(a, rows, mate, dist, cursor, chosen, limit)
        if self.certify:
            assert not _has_augmenting_path(rows, left, mate), "matching is not maximum"
        out = Matching()
        for a in left:
            b = mate[a]
            if b >= 0:
                out.add(ids[a], ids[b])
        return out

    @staticmethod
    def _levels(rows, left, mate, dist):
        """Layer the left vertices by alternating distance; returns the length
        of a shortest augmenting path (in left layers) or _INF."""
        q = VertexQueue(capacity=len(left) + 1)
        for a in left:
            if mate[a] < 0:
                dist[a] = 0
                q.offer(a)
            else:
                dist[a] = _INF
        limit = _INF
        while not q.is_empty():
            a = q.poll()
            da = dist[a]
            if da >= limit:
                break
            for b in rows[a]:
                w = mate[b]
                if w < 0:
                    if limit == _INF:
                        limit = da + 1
                elif dist[w] == _INF:
                    dist[w] = da + 1
                    q.offer(w)
        return limit

    @staticmethod
    def _augment(root, rows, mate, dist, cursor, chosen, limit):
        st = VertexStack()
        st.push(root)
        while not st.is_empty():
            a = st.peek()
            row = rows[a]
            i = cursor[a]
            if i == len(row):
                dist[a] = _INF
                st.pop()
                continue
            cursor[a] = i + 1
            b = row[i]
            w = mate[b]
            if w < 0:
                if dist[a] + 1 != limit:
                    continue
                chosen[a] = b
                for x in st:
                    y = chosen[x]
                    mate[x] = y
                    mate[y] = x
                return True
            if dist[w] == dist[a] + 1:
                chosen[a] = b
                st.push(w)
        return False


def _has_augmenting_path(rows, left, mate) -> bool:
    seen = bytearray(len(rows))
    q = VertexQueue()
    for a in left:
        if mate[a] < 0:
            seen[a] = 1
            q.offer(a)
    while not q.is_empty():
        a = q.poll()
        for b in rows[a]:
            if mate[a] == b:
                continue
            w = mate[b]
            if w < 0:
                return True
            if not seen[w]:
                seen[w] = 1
                q.offer(w)
    return False


def hopcroft_karp(g, certify: bool = True) -> Matching:
    return HopcroftKarp(g, certify).run()


maximum_matching = hopcroft_karp
