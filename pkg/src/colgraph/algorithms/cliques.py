"""Maximal clique enumeration (Bron-Kerbosch with pivoting)."""

from __future__ import annotations

from typing import Iterator

from ..collections import Clique
from .applicability import SIMPLE_UNDIRECTED, prepare


def maximal_cliques(g) -> Iterator[Clique]:
    """Stream every maximal clique once.

    The pivot is the vertex of ``P | X`` with the greatest degree (lowest
    internal index on ties). Cliques are produced lazily, so the full set is
    never held in memory.
    """
    g = prepare(g, SIMPLE_UNDIRECTED)
    csr = g.csr()
    n = csr.num_vertices
    off = csr.offsets.tolist()
    tgt = csr.targets.tolist()
    ids = csr.ids.tolist()
    nbrs = [frozenset(tgt[off[a] : off[a + 1]]) for a in range(n)]
    deg = [len(s) for s in nbrs]
    if n == 0:
        return

    def pivot(P, X):
        best = -1
        for u in P | X:
            if best < 0 or deg[u] > deg[best] or (deg[u] == deg[best] and u < best):
                best = u
        return best

    # explicit stack of (R, P, X, candidates iterator)
    P0 = set(range(n))
    X0: set[int] = set()
    u = pivot(P0, X0)
    stack = [([], P0, X0, iter(sorted(P0 - nbrs[u])))]
    while stack:
        R, P, X, cands = stack[-1]
        v = next(cands, None)
        if v is None:
            stack.pop()
            continue
        Nv = nbrs[v]
        R2 = R + [v]
        P2 = P & Nv
        X2 = X & Nv
        P.discard(v)
        X.add(v)
        if not P2 and not X2:
            yield Clique(ids[a] for a in R2)
            continue
        if not P2:
            continue
        u = pivot(P2, X2)
        stack.append((R2, P2, X2, iter(sorted(P2 - nbrs[u]))))


def clique_number(g) -> int:
    return max((len(c) for c in maximal_cliques(g)), default=0)
