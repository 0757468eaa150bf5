"""A short walk through the library: build, mutate, query, run algorithms."""

from colgraph import DIGRAPH, GraphBuilder, estimate_memory
from colgraph import generators as gen
from colgraph.algorithms import connected_components, dijkstra, hopcroft_karp, maximal_cliques, prim
from colgraph.io import from_text, to_text
from colgraph.traversal import bfs

# a weighted road map
roads = (
    GraphBuilder()
    .num_vertices(5)
    .add_edge(0, 1, 4.0)
    .add_edge(0, 2, 1.0)
    .add_edge(2, 1, 2.0)
    .add_edge(1, 3, 5.0)
    .add_edge(3, 4, 3.0)
    .build()
)
res = dijkstra(roads, 0)
print("distance 0 -> 4:", res.distance(4), "via", list(res.path(4)))
print("spanning tree weight:", prim(roads).weight)
print(estimate_memory(roads).format())

# iterate and delete in place; the mirror cell on the other side follows
g = gen.complete(6)
it = g.neighbor_iterator(0)
for u, _slot in it:
    if u % 2:
        it.remove()
print("degree of 0 after removing odd neighbors:", g.degree(0))
g.check_invariants()

print("BFS levels from 0:", {x.vertex: x.level for x in bfs(g, 0)})
print("components of a sparse Gnp:", len(connected_components(gen.gnp(40, 0.03, seed=1))))
print("maximal cliques of C5:", sorted(sorted(c) for c in maximal_cliques(gen.cycle(5))))
print("matching in a random bipartite graph:", hopcroft_karp(gen.random_bipartite_gnp(40, 0.1, seed=2)).size)

d = GraphBuilder(DIGRAPH).num_vertices(3).edges([0, 1], [1, 2]).build()
text = to_text(d)
print(text, end="")
assert to_text(from_text(text)) == text
