"""The benchmark experiments.

Each experiment separates an untimed ``setup`` (graph generation, where the
construction is not what is being measured) from the timed ``run``, which
returns a checksum proving the work was done. Random inputs are drawn from
the seeded generators, so the same parameters give the same checksum on
every run and on both backends.
"""

from __future__ import annotations

import math
from dataclasses import replace

import numpy as np

from .. import generators as gen
from .. import traversal
from ..algorithms import _kernels as K
from ..algorithms.flow import edmonds_karp
from ..algorithms.matching import hopcroft_karp
from ..algorithms.shortest_paths import SingleSourceShortestPath
from ..algorithms.spanning_tree import kruskal, prim
from ..core.builder import GraphBuilder
from ..core.kinds import GRAPH
from ..core.memory import estimate_memory
from . import naive
from .harness import BenchParams, ChecksumMismatch, ParameterError, measure, save_report

# integer weights keep every checksum exact, whatever the summation order
INT_WEIGHTS = ("int", 1, 100)


def _memory_of(g) -> dict:
    model = estimate_memory(g)
    out = {"modeled_memory_bytes": model.total}
    if model.bitset_active:
        out = {
            "modeled_memory_bytes": model.total_with_bitset,
            "memory_without_bitset_bytes": model.total,
            "memory_tight_bitset_bytes": model.total_tight,
            "bitset_figure": model.bitset_figure,
        }
    return out


class Experiment:
    name = ""
    defaults: dict = {}
    naive_ok = True
    reference = ""

    def resolve(self, params: BenchParams) -> BenchParams:
        if params.n < 1:
            raise ParameterError("n must be positive")
        extra = {k: v for k, v in self.defaults.items() if getattr(params, k) is None}
        if callable(extra.get("m")):
            # derived densities saturate on tiny graphs
            extra["m"] = min(extra["m"](params.n), params.n * (params.n - 1) // 2)
        params = replace(params, **extra)
        if params.p is not None and not 0.0 <= params.p <= 1.0:
            raise ParameterError("p must lie in [0, 1]")
        if params.k is not None and params.k < 0:
            raise ParameterError("k must be non-negative")
        if params.m is not None and params.m < 0:
            raise ParameterError("m must be non-negative")
        if params.engine not in ("iterator", "kernel"):
            raise ParameterError("engine must be 'iterator' or 'kernel'")
        self.check(params)
        return params

    def check(self, params):
        pass

    def setup(self, params, backend) -> dict:
        return {}

    def run(self, ctx, params, backend):
        raise NotImplementedError

    def memory(self, ctx, params):
        g = ctx.get("graph")
        return None if g is None else _memory_of(g)

    def notes(self, ctx, params) -> dict:
        return {"reference": self.reference} if self.reference else {}

    @staticmethod
    def _naive_copy(ctx, backend):
        if backend == "naive":
            ctx["naive"] = naive.from_graph(ctx["graph"])
        return ctx


# ------------------------------------------------------------------ creation


class CreateEmpty(Experiment):
    name = "create-empty"
    reference = "125 ms and 772 MB for n=50,000,000 on the original JVM setup"

    def run(self, ctx, params, backend):
        if backend == "naive":
            g = naive.empty(params.n)
            return g.n
        g = GraphBuilder(GRAPH).num_vertices(params.n).build()
        ctx["graph"] = g
        return g.num_vertices


class CreateComplete(Experiment):
    name = "create-complete"
    reference = "484 ms and 108 MB for n=5000 on the original JVM setup"

    def setup(self, params, backend):
        if backend == "naive":
            return {}
        i, j = np.triu_indices(params.n, 1)
        return {"src": i, "dst": j}

    def run(self, ctx, params, backend):
        if backend == "naive":
            return naive.complete(params.n).m
        # the builder validates every edge against the simple-graph constraints
        g = GraphBuilder(GRAPH).num_vertices(params.n).edges(ctx.pop("src"), ctx.pop("dst")).build()
        ctx["graph"] = g
        return g.num_edges


class CreateRegular(Experiment):
    name = "create-regular"
    defaults = {"k": 5}

    def check(self, params):
        if 2 * params.k >= params.n:
            raise ParameterError("create-regular needs 2k < n")

    def run(self, ctx, params, backend):
        if backend == "naive":
            return naive.regular2k(params.n, params.k).m
        g = gen.regular2k(params.n, params.k)
        ctx["graph"] = g
        return g.num_edges


class City:
    __slots__ = ("id", "name")

    def __init__(self, i):
        self.id = i
        self.name = f"city-{i}"


class Road:
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = a
        self.b = b


class LabeledWeightedMemory(Experiment):
    """Complete graph with label objects on vertices and edges, and a complete
    graph with weights on all edges; reports the modeled memory of both."""

    name = "labeled-weighted-memory"
    naive_ok = False
    reference = "300 MB labeled and 396 MB weighted for n=5000 on the original JVM setup"

    def setup(self, params, backend):
        n = params.n
        i, j = np.triu_indices(n, 1)
        cities = [City(v) for v in range(n)]
        roads = [Road(a, b) for a, b in zip(i.tolist(), j.tolist())]
        return {"src": i, "dst": j, "cities": cities, "roads": roads}

    def run(self, ctx, params, backend):
        n = params.n
        b = GraphBuilder(GRAPH).labeled_vertices(ctx["cities"])
        labeled = b.edges(ctx["src"], ctx["dst"], labels=ctx["roads"]).build()
        weighted = gen.complete(n, weights=(0.0, 1.0), seed=params.seed)
        ctx["graph"] = labeled
        ctx["weighted"] = weighted
        return labeled.num_edges + weighted.num_edges

    def memory(self, ctx, params):
        lab = estimate_memory(ctx["graph"])
        w = estimate_memory(ctx["weighted"])
        return {
            "modeled_memory_bytes": lab.total_with_bitset,
            "weighted_memory_bytes": w.total_with_bitset,
            "labeled_without_bitset_bytes": lab.total,
            "weighted_without_bitset_bytes": w.total,
        }


# ------------------------------------------------------------------ alteration


class RemoveEdges(Experiment):
    name = "remove-edges"

    def setup(self, params, backend):
        if backend == "naive":
            return {"naive": naive.complete(params.n)}
        return {"graph": gen.complete(params.n)}

    def run(self, ctx, params, backend):
        removed = 0
        if backend == "naive":
            g = ctx["naive"]
            for v, vert in g.vertices.items():
                while vert.out:
                    g.remove_edge(v, vert.out[-1].other(v))
                    removed += 1
            final = g.m
        else:
            g = ctx["graph"]
            for v in g.vertices():
                it = g.neighbor_iterator(v)
                for _ in it:
                    it.remove()
                    removed += 1
            final = g.num_edges
        if final:
            raise ChecksumMismatch(f"remove-edges left {final} edges")
        ctx["final_m"] = final
        return removed

    def memory(self, ctx, params):
        return None

    def notes(self, ctx, params):
        return {"final_m": ctx.get("final_m")}


class RemoveVertices(Experiment):
    name = "remove-vertices"
    # average degree 100
    defaults = {"m": lambda n: 50 * n}

    def setup(self, params, backend):
        g = gen.gnm(params.n, params.m, seed=params.seed)
        return self._naive_copy({"graph": g}, backend)

    def run(self, ctx, params, backend):
        if backend == "naive":
            g = ctx["naive"]
            for v in list(g.vertices):
                g.remove_vertex(v)
            return params.n - g.n
        g = ctx["graph"]
        for v in g.vertices():
            g.remove_vertex(v)
        return params.n - g.num_vertices

    def memory(self, ctx, params):
        return None


# ------------------------------------------------------------------ inspection


class IterateTournament(Experiment):
    """Ten sweeps over every successor and predecessor list of a random tournament."""

    name = "iterate-tournament"
    sweeps = 10

    def setup(self, params, backend):
        return self._naive_copy({"graph": gen.random_tournament(params.n, seed=params.seed)}, backend)

    def run(self, ctx, params, backend):
        count = 0
        if backend == "naive":
            verts = list(ctx["naive"].vertices.values())
            for _ in range(self.sweeps):
                for vert in verts:
                    for _e in vert.out:
                        count += 1
                    for _e in vert.inc:
                        count += 1
            return count
        g = ctx["graph"]
        vs = g.vertices()
        for _ in range(self.sweeps):
            for v in vs:
                for _u, _slot in g.successor_iterator(v):
                    count += 1
                for _u, _slot in g.predecessor_iterator(v):
                    count += 1
        return count


class _Traversal(Experiment):
    defaults = {"p": 0.2}
    kind = "dfs"
    reference = ""

    def setup(self, params, backend):
        return self._naive_copy({"graph": gen.gnp(params.n, params.p, seed=params.seed)}, backend)

    def run(self, ctx, params, backend):
        """n traversals, one from every vertex; the checksum counts visits."""
        total = 0
        if backend == "naive":
            g = ctx["naive"]
            step = naive.dfs_count if self.kind == "dfs" else naive.bfs_count
            for s in g.vertices:
                total += step(g, s)
            return total
        g = ctx["graph"]
        if params.engine == "kernel":
            csr = g.csr()
            n = csr.num_vertices
            order = np.empty(n, dtype=np.int32)
            if self.kind == "dfs":
                visited = np.empty(n, dtype=np.bool_)
                stack = np.empty(n, dtype=np.int32)
                cursor = np.empty(n, dtype=np.int64)
                for s in range(n):
                    total += K.dfs_full(csr.offsets, csr.targets, s, order, visited, stack, cursor)
            else:
                level = np.empty(n, dtype=np.int32)
                for s in range(n):
                    total += K.bfs_full(csr.offsets, csr.targets, s, order, level)
            return total
        it = traversal.dfs if self.kind == "dfs" else traversal.bfs
        for s in g.vertices():
            for _node in it(g, s):
                total += 1
        return total


class DFS(_Traversal):
    name = "dfs"
    kind = "dfs"
    reference = "about 500 ms for n=1000 on the original JVM setup"


class BFS(_Traversal):
    name = "bfs"
    kind = "bfs"


# ------------------------------------------------------------------ algorithms


class _AllSources(Experiment):
    """Single-source shortest paths repeated with the source in every vertex."""

    def run(self, ctx, params, backend):
        if backend == "naive":
            g = ctx["naive"]
            return math.fsum(math.fsum(naive.dijkstra(g, s).values()) for s in g.vertices)
        g = ctx["graph"]
        csr = g.csr()
        total = []
        for s in g.vertices():
            r = SingleSourceShortestPath.get_instance(g, s).run(csr)
            total.append(r.checksum())
        ctx["algorithm"] = r.algorithm if g.num_vertices else ""
        return math.fsum(total)

    def notes(self, ctx, params):
        out = super().notes(ctx, params)
        if "algorithm" in ctx:
            out["selected"] = ctx["algorithm"]
        return out


class DijkstraSparse(_AllSources):
    name = "dijkstra-sparse"
    # directed Gnm with average (in + out) degree 50
    defaults = {"m": lambda n: 25 * n}

    def setup(self, params, backend):
        g = gen.random_digraph_gnm(params.n, params.m, seed=params.seed, weights=INT_WEIGHTS)
        return self._naive_copy({"graph": g}, backend)


class DijkstraDense(_AllSources):
    name = "dijkstra-dense"
    defaults = {"p": 0.5}

    def setup(self, params, backend):
        g = gen.random_digraph_gnp(params.n, params.p, seed=params.seed, weights=INT_WEIGHTS)
        return self._naive_copy({"graph": g}, backend)


class _MST(Experiment):
    defaults = {"p": 0.1}

    def setup(self, params, backend):
        g = gen.gnp(params.n, params.p, seed=params.seed, weights=INT_WEIGHTS)
        return self._naive_copy({"graph": g}, backend)


class Prim(_MST):
    name = "prim"

    def run(self, ctx, params, backend):
        if backend == "naive":
            return naive.prim(ctx["naive"])
        return prim(ctx["graph"]).weight


class Kruskal(_MST):
    name = "kruskal"

    def run(self, ctx, params, backend):
        if backend == "naive":
            return naive.kruskal(ctx["naive"])
        return kruskal(ctx["graph"]).weight


class EdmondsKarpExperiment(Experiment):
    name = "edmonds-karp"
    defaults = {"p": 0.1}
    naive_ok = False

    def check(self, params):
        if params.n < 2:
            raise ParameterError("edmonds-karp needs n >= 2")

    def setup(self, params, backend):
        return {"graph": gen.random_flow_network(params.n, params.p, seed=params.seed)}

    def run(self, ctx, params, backend):
        g = ctx["graph"]
        return edmonds_karp(g, 0, params.n - 1).value


class HopcroftKarpExperiment(Experiment):
    name = "hopcroft-karp"
    defaults = {"p": 0.1}
    reference = "65 ms for n=10,000 on the original JVM setup"

    def setup(self, params, backend):
        g = gen.random_bipartite_gnp(params.n, params.p, seed=params.seed)
        return self._naive_copy({"graph": g}, backend)

    def run(self, ctx, params, backend):
        if backend == "naive":
            return naive.hopcroft_karp(ctx["naive"])
        return hopcroft_karp(ctx["graph"]).size


EXPERIMENTS: dict[str, Experiment] = {
    e.name: e
    for e in (
        CreateEmpty(),
        CreateComplete(),
        CreateRegular(),
        LabeledWeightedMemory(),
        RemoveEdges(),
        RemoveVertices(),
        IterateTournament(),
        DFS(),
        BFS(),
        DijkstraSparse(),
        DijkstraDense(),
        Prim(),
        Kruskal(),
        EdmondsKarpExperiment(),
        HopcroftKarpExperiment(),
    )
}


def get_experiment(name: str) -> Experiment:
    try:
        return EXPERIMENTS[name]
    except KeyError:
        raise ParameterError(f"unknown experiment {name!r}; choose from {', '.join(EXPERIMENTS)}") from None


def run_experiment(name: str, params: BenchParams, out=None, rss: bool = False):
    """Measure one experiment on the column store; append to ``out`` when given."""
    report = measure(get_experiment(name), params, rss=rss)
    if out:
        save_report(report, out)
    return report


def compare_backends(name: str, params: BenchParams, out=None, rss: bool = False):
    """Same experiment and seed on both backends; checksums must agree.

    Returns ``(column_store_report, naive_report, speed_ratio)`` where the
    ratio is naive median time over column-store median time.
    """
    exp = get_experiment(name)
    if not exp.naive_ok:
        raise ParameterError(f"{name} is not supported by the naive backend")
    ours = measure(exp, params, "colgraph", rss=rss)
    ref = measure(exp, params, "naive", rss=rss)
    if ours.checksum != ref.checksum:
        raise ChecksumMismatch(f"{name}: column store {ours.checksum} vs naive {ref.checksum}")
    ratio = ref.median_ms / ours.median_ms if ours.median_ms > 0 else math.inf
    ours.extra["speedup_vs_naive"] = round(ratio, 3)
    if out:
        save_report(ours, out)
        save_report(ref, out)
    return ours, ref, ratio
