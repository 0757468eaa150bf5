"""Which graph kinds an algorithm accepts.

``GraphAlgorithm`` runs on anything. ``SimpleGraphAlgorithm`` runs on the
support graph of its input (directions dropped, parallels merged, loops
removed) unless the input is already simple and undirected.
``DirectedGraphAlgorithm`` rejects undirected input.
"""

from __future__ import annotations

import functools

from ..core.kinds import GRAPH
from ..errors import UnsupportedKindError
from ..transforms import support_graph

ANY = "any-graph"
SIMPLE_UNDIRECTED = "simple-undirected-only"
DIGRAPH_ONLY = "digraph-only"


def prepare(g, applicability: str):
    if applicability == SIMPLE_UNDIRECTED:
        return g if g.kind == GRAPH else support_graph(g)
    if applicability == DIGRAPH_ONLY and not g.kind.directed:
        raise UnsupportedKindError(f"this algorithm needs a directed graph, got {g.kind.name}")
    return g


class GraphAlgorithm:
    applicability = ANY

    def __init__(self, graph):
        self.input_graph = graph
        self.graph = prepare(graph, self.applicability)


class SimpleGraphAlgorithm(GraphAlgorithm):
    applicability = SIMPLE_UNDIRECTED


class DirectedGraphAlgorithm(GraphAlgorithm):
    applicability = DIGRAPH_ONLY


def applies_to(applicability: str):
    """Decorator for function-style algorithms taking the graph first."""

    def wrap(fn):
        @functools.wraps(fn)
        def inner(g, *args, **kwargs):
            return fn(prepare(g, applicability), *args, **kwargs)

        inner.applicability = applicability
        return inner

    return wrap
