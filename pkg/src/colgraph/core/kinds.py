"""The six graph kinds: direction x multiple edges x self-loops."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GraphKind:
    directed: bool = False
    allows_multiple_edges: bool = False
    allows_self_loops: bool = False

    def __post_init__(self):
        if self.allows_self_loops and not self.allows_multiple_edges:
            raise ValueError("a kind allowing self-loops must also allow multiple edges")

    @property
    def is_simple(self) -> bool:
        return not (self.allows_multiple_edges or self.allows_self_loops)

    @property
    def name(self) -> str:
        if self.allows_self_loops:
            base = "pseudograph"
        elif self.allows_multiple_edges:
            base = "multigraph"
        else:
            return "digraph" if self.directed else "graph"
        return "d" + base if self.directed else base

    @classmethod
    def from_name(cls, name: str) -> GraphKind:
        try:
            return KINDS[name]
        except KeyError:
            raise ValueError(f"unknown graph kind {name!r}; expected one of {sorted(KINDS)}") from None

    def __str__(self):
        return self.name


GRAPH = GraphKind()
DIGRAPH = GraphKind(directed=True)
MULTIGRAPH = GraphKind(allows_multiple_edges=True)
DIRECTED_MULTIGRAPH = GraphKind(directed=True, allows_multiple_edges=True)
PSEUDOGRAPH = GraphKind(allows_multiple_edges=True, allows_self_loops=True)
DIRECTED_PSEUDOGRAPH = GraphKind(directed=True, allows_multiple_edges=True, allows_self_loops=True)

KINDS = {k.name: k for k in (GRAPH, DIGRAPH, MULTIGRAPH, DIRECTED_MULTIGRAPH, PSEUDOGRAPH, DIRECTED_PSEUDOGRAPH)}
