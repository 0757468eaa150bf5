"""Connectivity: components, blocks and cut vertices, strong components, bipartiteness."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..collections import Cycle, VertexQueue
from ..errors import NotBipartiteError
from .applicability import DIGRAPH_ONLY, SIMPLE_UNDIRECTED, prepare


def _rows(g):
    """Per-position lists of neighbor positions, in slot order."""
    csr = g.csr()
    off = csr.offsets.tolist()
    tgt = csr.targets.tolist()
    return [tgt[off[a] : off[a + 1]] for a in range(csr.num_vertices)], csr.ids.tolist()


def connected_components(g) -> list[list[int]]:
    """Vertex sets of the components, each in DFS preorder; digraphs give weak components."""
    g = prepare(g, SIMPLE_UNDIRECTED)
    rows, ids = _rows(g)
    n = len(rows)
    comp = [-1] * n
    out = []
    for root in range(n):
        if comp[root] >= 0:
            continue
        c = len(out)
        comp[root] = c
        members = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for u in rows[v]:
                if comp[u] < 0:
                    comp[u] = c
                    members.append(u)
                    stack.append(u)
        out.append([ids[a] for a in members])
    return out


def is_connected(g) -> bool:
    return g.num_vertices <= 1 or len(connected_components(g)) == 1


@dataclass
class Biconnectivity:
    components: list[set[int]]
    edge_components: list[list[tuple[int, int]]]
    cut_vertices: set[int] = field(default_factory=set)


def biconnected_components(g) -> Biconnectivity:
    """Blocks and cut vertices by a single lowpoint DFS with a stack of edges.

    An isolated vertex is a block on its own with no edges.
    """
    g = prepare(g, SIMPLE_UNDIRECTED)
    rows, ids = _rows(g)
    n = len(rows)
    disc = [-1] * n
    low = [0] * n
    estack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []
    cuts = set()
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        if not rows[root]:
            blocks.append([(root, root)])
            continue
        children = 0
        # frames: vertex, parent, next slot
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, p, i = frame
            row = rows[v]
            if i < len(row):
                frame[2] = i + 1
                u = row[i]
                if disc[u] < 0:
                    estack.append((v, u))
                    disc[u] = low[u] = t
                    t += 1
                    if v == root:
                        children += 1
                    stack.append([u, v, 0])
                elif u != p and disc[u] < disc[v]:
                    estack.append((v, u))
                    if disc[u] < low[v]:
                        low[v] = disc[u]
                continue
            stack.pop()
            if p < 0:
                continue
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= disc[p]:
                if p != root:
                    cuts.add(p)
                block = []
                while True:
                    e = estack.pop()
                    block.append(e)
                    if e == (p, v):
                        break
                blocks.append(block)
        if children > 1:
            cuts.add(root)
    comps = []
    edge_comps = []
    for block in blocks:
        if len(block) == 1 and block[0][0] == block[0][1]:
            comps.append({ids[block[0][0]]})
            edge_comps.append([])
            continue
        es = [(ids[a], ids[b]) for a, b in reversed(block)]
        edge_comps.append(es)
        comps.append({x for e in es for x in e})
    return Biconnectivity(comps, edge_comps, {ids[a] for a in cuts})


def cut_vertices(g) -> set[int]:
    return biconnected_components(g).cut_vertices


def is_biconnected(g) -> bool:
    """Connected, at least two vertices and no cut vertex."""
    if g.num_vertices < 2 or not is_connected(g):
        return False
    return not cut_vertices(g)


def strongly_connected_components(g) -> list[list[int]]:
    """Tarjan's single-pass algorithm; components come out in reverse topological order."""
    g = prepare(g, DIGRAPH_ONLY)
    rows, ids = _rows(g)
    n = len(rows)
    index = [-1] * n
    low = [0] * n
    on = bytearray(n)
    st: list[int] = []
    out = []
    t = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        index[root] = low[root] = t
        t += 1
        st.append(root)
        on[root] = 1
        call = [[root, 0]]
        while call:
            frame = call[-1]
            v, i = frame
            row = rows[v]
            if i < len(row):
                frame[1] = i + 1
                u = row[i]
                if index[u] < 0:
                    index[u] = low[u] = t
                    t += 1
                    st.append(u)
                    on[u] = 1
                    call.append([u, 0])
                elif on[u] and index[u] < low[v]:
                    low[v] = index[u]
                continue
            call.pop()
            if call:
                p = call[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    x = st.pop()
                    on[x] = 0
                    comp.append(ids[x])
                    if x == v:
                        break
                out.append(comp)
    return out


def is_strongly_connected(g) -> bool:
    return g.num_vertices <= 1 or len(strongly_connected_components(g)) == 1


def bipartition(g) -> dict[int, int]:
    """BFS 2-coloring ``{vertex: 0 or 1}``; raises :class:`NotBipartiteError` with an odd cycle."""
    g = prepare(g, SIMPLE_UNDIRECTED)
    rows, ids = _rows(g)
    n = len(rows)
    color = [-1] * n
    parent = [-1] * n
    level = [0] * n
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        q = VertexQueue()
        q.offer(root)
        while not q.is_empty():
            v = q.poll()
            for u in rows[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    level[u] = level[v] + 1
                    q.offer(u)
                elif color[u] == color[v]:
                    raise NotBipartiteError(_odd_cycle(v, u, parent, level, ids))
    return dict(zip(ids, color))


def _odd_cycle(v, u, parent, level, ids) -> Cycle:
    # climb both tree paths to the lowest common ancestor
    left, right = [v], [u]
    a, b = v, u
    while level[a] > level[b]:
        a = parent[a]
        left.append(a)
    while level[b] > level[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    walk = left[::-1] + right
    return Cycle([ids[x] for x in walk])


def is_bipartite(g):
    """The 2-coloring, or None when an odd cycle exists."""
    try:
        return bipartition(g)
    except NotBipartiteError:
        return None
