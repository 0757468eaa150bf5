from .builder import GraphBuilder, add_edges, build_graph
from .edge import Edge
from .graph import (
    CSR,
    DEFAULT_WEIGHT,
    Digraph,
    DirectedMultigraph,
    DirectedPseudograph,
    Graph,
    Multigraph,
    NeighborIterator,
    OpStats,
    Pseudograph,
    graph_class,
    new_graph,
)
from .kinds import (
    DIGRAPH,
    DIRECTED_MULTIGRAPH,
    DIRECTED_PSEUDOGRAPH,
    GRAPH,
    KINDS,
    MULTIGRAPH,
    PSEUDOGRAPH,
    GraphKind,
)
from .memory import MemoryModel, estimate_memory, model_memory
