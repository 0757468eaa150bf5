"""Transient edge views materialized from adjacency cells."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Tuple


@dataclass(frozen=True, eq=False)
class Edge:
    """One edge as seen from an adjacency cell.

    Edges are not stored by the graph; a handle is created on demand and
    carries the coordinates ``slot = (owner_vertex, adjacency_index)`` of the
    cell it was read from, so it can be passed back for O(1) operations as
    long as the graph was not restructured in between.

    Undirected handles compare equal regardless of endpoint order.
    """

    source: int
    target: int
    directed: bool = False
    weight: Optional[float] = None
    label: Any = None
    slot: Optional[Tuple[int, int]] = None

    def endpoints(self) -> Tuple[int, int]:
        return self.source, self.target

    def other(self, vertex: int) -> int:
        if vertex == self.source:
            return self.target
        if vertex == self.target:
            return self.source
        raise ValueError(f"{vertex} is not an endpoint of {self}")

    def is_loop(self) -> bool:
        return self.source == self.target

    def _key(self):
        if self.directed:
            return (True, self.source, self.target)
        a, b = self.source, self.target
        return (False, a, b) if a <= b else (False, b, a)

    def __eq__(self, other):
        if not isinstance(other, Edge):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        arrow = "->" if self.directed else "-"
        extra = ""
        if self.weight is not None:
            extra += f", weight={self.weight!r}"
        if self.label is not None:
            extra += f", label={self.label!r}"
        return f"Edge({self.source}{arrow}{self.target}{extra})"
