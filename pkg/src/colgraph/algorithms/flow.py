"""Maximum flow by Edmonds-Karp (shortest augmenting paths).

Capacities are the arc weights. Flow values live in one array per vertex,
parallel to its successor list, so no edge objects are created. The
residual reverse arc of ``v -> u`` (slot ``i`` of ``v``) is reached from
``u``'s predecessor list, whose predecessor positions give ``i`` directly.
"""

from __future__ import annotations

from array import array

from ..collections import VertexQueue
from ..errors import NegativeWeightError
from .applicability import DirectedGraphAlgorithm

_EPS = 1e-12


class FlowAssignment:
    """Per-slot flow on a digraph; ``flow[a][i]`` is the flow on successor slot i of position a."""

    def __init__(self, g, source, sink, flow, value, cut):
        self.graph = g
        self.source = source
        self.sink = sink
        self.flow = flow
        self.value = value
        self.source_side: set[int] = cut

    def flow_on(self, v: int, u: int) -> float:
        """Total flow on the arcs ``v -> u``."""
        g = self.graph
        a = g.index_of(v)
        row = g._adj[a]
        return sum(self.flow[a][i] for i in range(g._deg[a]) if row[i] == u)

    def arcs(self):
        """Yield ``(v, u, flow)`` for every arc, in edge order."""
        g = self.graph
        for a in range(g.num_vertices):
            v = g._vertices[a]
            row = g._adj[a]
            for i in range(g._deg[a]):
                yield v, row[i], self.flow[a][i]

    def cut_capacity(self) -> float:
        """Capacity of the arcs leaving the source side of the residual cut."""
        g = self.graph
        side = self.source_side
        total = 0.0
        for a in range(g.num_vertices):
            v = g._vertices[a]
            if v not in side:
                continue
            row = g._adj[a]
            for i in range(g._deg[a]):
                if row[i] not in side:
                    total += _capacity(g, a, i)
        return total

    def check(self, tol: float = 1e-9) -> None:
        """Capacity bounds, conservation and value = residual cut capacity."""
        g = self.graph
        net = {v: 0.0 for v in g.vertices()}
        for v, u, f in self.arcs():
            assert -tol <= f, f"negative flow on {v}->{u}"
            net[v] -= f
            net[u] += f
        for a in range(g.num_vertices):
            for i in range(g._deg[a]):
                assert self.flow[a][i] <= _capacity(g, a, i) + tol, "flow above capacity"
        for v, x in net.items():
            if v not in (self.source, self.sink):
                assert abs(x) <= tol * max(1.0, self.value), f"conservation violated at {v}"
        assert abs(-net[self.source] - self.value) <= tol * max(1.0, self.value)
        assert abs(self.cut_capacity() - self.value) <= tol * max(1.0, self.value), "value differs from min cut"


def _capacity(g, a, i):
    ew = g._eweights
    return 1.0 if ew is None else ew[a][i]


class EdmondsKarp(DirectedGraphAlgorithm):
    def __init__(self, graph, source: int, sink: int, certify: bool = True):
        super().__init__(graph)
        if source == sink:
            raise ValueError("source and sink must differ")
        self.source = source
        self.sink = sink
        self.certify = certify

    def run(self) -> FlowAssignment:
        g = self.graph
        s = g.index_of(self.source)
        t = g.index_of(self.sink)
        n = g.num_vertices
        adj, deg = g._adj, g._deg
        pred, indeg, ppos = g._pred, g._indeg, g._ppos
        vertices = g._vertices
        index = g._idx
        ew = g._eweights
        if ew is not None:
            for a in range(n):
                for i in range(deg[a]):
                    if ew[a][i] < 0:
                        raise NegativeWeightError("capacities must be non-negative")
        cap = [array("d", [1.0]) * deg[a] if ew is None else ew[a][: deg[a]] for a in range(n)]
        flow = [array("d", bytes(8 * deg[a])) for a in range(n)]
        # succ_pos[a][i]: position of the arc's head, resolved once
        succ_pos = [array("i", [index(u) for u in adj[a][: deg[a]]]) for a in range(n)]
        pred_pos = [array("i", [index(v) for v in pred[b][: indeg[b]]]) for b in range(n)]
        value = 0.0
        # how each vertex was reached: parent position, owner position, slot, +1 forward / -1 backward
        par = array("i", [-1]) * n
        via_owner = array("i", [0]) * n
        via_slot = array("i", [0]) * n
        via_dir = array("b", [0]) * n
        seen = bytearray(n)
        while True:
            seen[:] = bytes(n)
            seen[s] = 1
            q = VertexQueue()
            q.offer(s)
            found = False
            while not q.is_empty() and not found:
                a = q.poll()
                fa, ca, sa = flow[a], cap[a], succ_pos[a]
                for i in range(deg[a]):
                    b = sa[i]
                    if not seen[b] and ca[i] - fa[i] > _EPS:
                        seen[b] = 1
                        par[b], via_owner[b], via_slot[b], via_dir[b] = a, a, i, 1
                        if b == t:
                            found = True
                            break
                        q.offer(b)
                if found:
                    break
                pa, pp = pred_pos[a], ppos[a]
                for j in range(indeg[a]):
                    b = pa[j]
                    i = pp[j]
                    if not seen[b] and flow[b][i] > _EPS:
                        seen[b] = 1
                        par[b], via_owner[b], via_slot[b], via_dir[b] = a, b, i, -1
                        if b == t:
                            found = True
                            break
                        q.offer(b)
            if not found:
                break
            bottleneck = float("inf")
            x = t
            while x != s:
                o, i = via_owner[x], via_slot[x]
                r = cap[o][i] - flow[o][i] if via_dir[x] > 0 else flow[o][i]
                bottleneck = min(bottleneck, r)
                x = par[x]
            x = t
            while x != s:
                o, i = via_owner[x], via_slot[x]
                if via_dir[x] > 0:
                    flow[o][i] += bottleneck
                else:
                    flow[o][i] -= bottleneck
                x = par[x]
            value += bottleneck
        cut = {vertices[a] for a in range(n) if seen[a]}
        result = FlowAssignment(g, self.source, self.sink, flow, value, cut)
        if self.certify:
            result.check()
        return result


def edmonds_karp(g, source: int, sink: int, certify: bool = True) -> FlowAssignment:
    """Maximum ``source``-``sink`` flow; the min-cut certificate is checked unless disabled."""
    return EdmondsKarp(g, source, sink, certify).run()


maximum_flow = edmonds_karp
