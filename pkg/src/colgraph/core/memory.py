"""Byte-count model of the column-store layout.

The model charges every member a closed-form cost in ``n`` and ``m``: 4 bytes
per int or reference, 8 per double, plus per-list overhead of 4 bytes per
vertex for the outer array of references. It describes the layout, it does
not probe the process heap.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .kinds import GraphKind

# (per-vertex bytes, per-edge bytes); undirected edges cost per edge, not per cell
UNDIRECTED_MEMBERS = {
    "vertices": (4, 0),
    "degrees": (4, 0),
    "neighbors": (4, 8),
    "positions": (4, 8),
}
DIRECTED_MEMBERS = {
    "vertices": (4, 0),
    "indegrees": (4, 0),
    "outdegrees": (4, 0),
    "successors": (4, 4),
    "predecessors": (4, 4),
    "predecessorPositions": (4, 4),
}
LAZY_UNDIRECTED = {
    "vertexWeights": (8, 0),
    "vertexLabels": (4, 0),
    "edgeWeights": (4, 16),
    "edgeLabels": (4, 8),
    "vertexToIndex": (4, 0),
    "labelToVertex": (20, 0),
    "labelToEdge": (4, 104),
}
LAZY_DIRECTED = dict(LAZY_UNDIRECTED, edgeWeights=(4, 8), edgeLabels=(4, 4))
LAZY_MEMBERS = tuple(LAZY_UNDIRECTED)
SELF_LOOP_ENTRY_BYTES = 8


@dataclass
class MemoryModel:
    """Per-member byte counts plus totals.

    ``total`` sums the structural and lazy members. The adjacency bitset is
    reported apart: ``bitset_aggregate`` is the m-byte aggregate estimate
    (charged when any bitset is active), ``bitset_tight`` is
    ``min(m, sum of active bitset sizes)`` and ``bitset_figure`` names which
    of the two terms was the minimum.
    """

    kind: GraphKind
    n: int
    m: int
    members: dict[str, int] = field(default_factory=dict)
    active: frozenset = frozenset()
    bitset_active: int = 0
    bitset_aggregate: int = 0
    bitset_tight: int = 0
    bitset_figure: str = "inactive"

    @property
    def total(self) -> int:
        return sum(self.members.values())

    @property
    def total_with_bitset(self) -> int:
        """Total including the aggregate bitset estimate."""
        return self.total + self.bitset_aggregate

    @property
    def total_tight(self) -> int:
        return self.total + self.bitset_tight

    def rows(self) -> list[tuple[str, int]]:
        out = list(self.members.items())
        out.append(("adjacencyBitset", self.bitset_tight))
        return out

    def format(self) -> str:
        lines = [f"kind {self.kind.name}  n={self.n}  m={self.m}"]
        width = len("total+bitset(tight)")
        for name, size in self.members.items():
            lines.append(f"  {name:<{width}}  {size:>14,d}")
        lines.append(
            f"  {'adjacencyBitset':<{width}}  {self.bitset_tight:>14,d}"
            f"  ({self.bitset_figure}, {self.bitset_active} active)"
        )
        lines.append(f"  {'total':<{width}}  {self.total:>14,d}  ({self.total / 2**20:.1f} MiB)")
        lines.append(
            f"  {'total+bitset(m)':<{width}}  {self.total_with_bitset:>14,d}"
            f"  ({self.total_with_bitset / 2**20:.1f} MiB)"
        )
        lines.append(
            f"  {'total+bitset(tight)':<{width}}  {self.total_tight:>14,d}"
            f"  ({self.total_tight / 2**20:.1f} MiB)"
        )
        return "\n".join(lines)


def model_memory(
    kind: GraphKind,
    n: int,
    m: int,
    active=(),
    *,
    self_loop_vertices: int = 0,
    bitset_vertices: int = 0,
) -> MemoryModel:
    """Closed-form model for a hypothetical graph with the given lazy members."""
    active = frozenset(active)
    unknown = active - set(LAZY_MEMBERS)
    if unknown:
        raise ValueError(f"unknown lazy members: {sorted(unknown)}")
    base = DIRECTED_MEMBERS if kind.directed else UNDIRECTED_MEMBERS
    lazy = LAZY_DIRECTED if kind.directed else LAZY_UNDIRECTED
    members = {name: pv * n + pe * m for name, (pv, pe) in base.items()}
    for name in LAZY_MEMBERS:
        if name in active:
            pv, pe = lazy[name]
            members[name] = pv * n + pe * m
    if kind.allows_self_loops:
        members["selfLoops"] = SELF_LOOP_ENTRY_BYTES * self_loop_vertices
    model = MemoryModel(kind, n, m, members, active)
    if bitset_vertices:
        per_vertex = bitset_vertices * ((n + 7) // 8)
        model.bitset_active = bitset_vertices
        model.bitset_aggregate = m
        model.bitset_tight = min(m, per_vertex)
        model.bitset_figure = "aggregate" if m <= per_vertex else "per-vertex"
    return model


def active_members(g) -> frozenset:
    active = set()
    if g._vweights is not None:
        active.add("vertexWeights")
    if g._vlabels is not None:
        active.add("vertexLabels")
    if g._eweights is not None:
        active.add("edgeWeights")
    if g._elabels is not None:
        active.add("edgeLabels")
    if g._index is not None:
        active.add("vertexToIndex")
    if g._vlabel_map is not None:
        active.add("labelToVertex")
    if g._elabel_map is not None:
        active.add("labelToEdge")
    return frozenset(active)


def estimate_memory(g) -> MemoryModel:
    """Modeled byte count of ``g`` given the lazy members it has materialized."""
    bits = g._bits
    return model_memory(
        g.kind,
        g.num_vertices,
        g.num_edges,
        active_members(g),
        self_loop_vertices=len(g._loops) if g._loops else 0,
        bitset_vertices=0 if bits is None else sum(1 for w in bits if w is not None),
    )
