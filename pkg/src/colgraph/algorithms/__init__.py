"""Graph algorithms, each declaring which graph kinds it accepts."""

from .applicability import (
    ANY,
    DIGRAPH_ONLY,
    SIMPLE_UNDIRECTED,
    DirectedGraphAlgorithm,
    GraphAlgorithm,
    SimpleGraphAlgorithm,
    applies_to,
    prepare,
)
from .cliques import clique_number, maximal_cliques
from .coloring import Coloring, greedy_coloring
from .connectivity import (
    Biconnectivity,
    biconnected_components,
    bipartition,
    connected_components,
    cut_vertices,
    is_biconnected,
    is_bipartite,
    is_connected,
    is_strongly_connected,
    strongly_connected_components,
)
from .euler import eulerian_circuit, eulerian_violation, is_eulerian
from .flow import EdmondsKarp, FlowAssignment, edmonds_karp, maximum_flow
from .matching import HopcroftKarp, hopcroft_karp, maximum_matching
from .metrics import (
    GraphMetrics,
    center,
    degree_stats,
    diameter,
    distance_matrix,
    eccentricities,
    girth,
    metrics,
    periphery,
    pseudo_peripheral_vertex,
    radius,
)
from .ordering import acyclic_orientation, contains_cycle, find_cycle, is_acyclic, topological_sort
from .shortest_paths import (
    BellmanFord,
    DijkstraArray,
    DijkstraHeap,
    ShortestPathResult,
    SingleSourceShortestPath,
    all_pairs_shortest_paths,
    bellman_ford,
    dijkstra,
    floyd_warshall,
    shortest_paths,
)
from .spanning_tree import Kruskal, Prim, SpanningTree, kruskal, minimum_spanning_tree, prim
