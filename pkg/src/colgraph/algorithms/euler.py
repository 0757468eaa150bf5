"""Eulerian circuits by Hierholzer's algorithm."""

from __future__ import annotations

from ..collections import Circuit
from ..errors import NotEulerianError
from .connectivity import connected_components


def eulerian_violation(g) -> str | None:
    """Why ``g`` has no Eulerian circuit, or None when it has one."""
    if g.kind.directed:
        out = g.degrees()
        inn = g.indegrees()
        bad = [v for v, o, i in zip(g.vertices(), out.tolist(), inn.tolist()) if o != i]
        if bad:
            return f"in-degree differs from out-degree at vertex {bad[0]}"
    else:
        odd = [v for v, d in zip(g.vertices(), g.degrees().tolist()) if d % 2]
        if odd:
            return f"odd-degree vertex {odd[0]}"
    touched = [c for c in connected_components(g) if len(c) > 1 or _has_loop(g, c[0])]
    if len(touched) > 1:
        return f"edges lie in {len(touched)} different components"
    return None


def _has_loop(g, v):
    return g.kind.allows_self_loops and g.contains_edge(v, v)


def is_eulerian(g) -> bool:
    return eulerian_violation(g) is None


def eulerian_circuit(g, start: int | None = None) -> Circuit:
    """Closed walk using every edge exactly once, as ``v0, ..., vk = v0``.

    Works on a copy of ``g``: each step takes the first remaining cell of
    the current vertex through a neighbor iterator and removes it.
    Raises :class:`NotEulerianError` naming the violated condition.
    """
    why = eulerian_violation(g)
    if why is not None:
        raise NotEulerianError(why)
    if g.num_vertices == 0:
        return Circuit()
    if start is None:
        nonzero = [v for v, d in zip(g.vertices(), g.degrees().tolist()) if d]
        start = nonzero[0] if nonzero else g.vertex_at(0)
    elif g.num_edges and g.degree(start) == 0:
        raise NotEulerianError(f"start vertex {start} has no edges")
    work = g.copy()
    step = work.successor_iterator if work.kind.directed else work.neighbor_iterator
    stack = [start]
    walk = []
    while stack:
        v = stack[-1]
        it = step(v)
        cell = next(it, None)
        if cell is None:
            walk.append(stack.pop())
            continue
        it.remove()
        stack.append(cell[0])
    walk.reverse()
    return Circuit(walk)
