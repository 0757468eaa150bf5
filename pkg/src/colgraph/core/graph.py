"""Column-store graph representation.

Every per-vertex attribute lives in its own primitive array indexed by the
vertex's internal position, and every per-edge attribute lives in a
per-vertex array indexed by adjacency slot::

    vertices[i]       vertex id stored at position i
    degrees[i]        live length of adjacency[i]
    adjacency[i][s]   neighbor id at slot s
    positions[i][s]   slot of vertices[i] inside the neighbor's adjacency

Undirected edges occupy two mirrored cells; ``positions`` links them so that
weight/label updates and removals touch both cells in O(1). Directed graphs
keep successor lists, predecessor lists and predecessor positions instead.
Weights, labels, adjacency bitsets and the lookup maps are allocated lazily
on first use.
"""

from __future__ import annotations

import math
import operator
from array import array
from dataclasses import dataclass
from typing import Any, Iterator

import numpy as np

from ..errors import (
    ConcurrentModificationError,
    DuplicateEdgeError,
    DuplicateVertexError,
    EdgeNotFoundError,
    InvalidVertexError,
    SelfLoopError,
    StaleEdgeError,
    UnsupportedKindError,
    VertexNotFoundError,
)
from .edge import Edge
from .kinds import (
    DIGRAPH,
    DIRECTED_MULTIGRAPH,
    DIRECTED_PSEUDOGRAPH,
    GRAPH,
    MULTIGRAPH,
    PSEUDOGRAPH,
    GraphKind,
)

INT32_MAX = 2**31 - 1
DEFAULT_ADJACENCY_CAPACITY = 8
DEFAULT_WEIGHT = 1.0

_ONE_WORD = array("Q", [0])


def grown_capacity(capacity: int, needed: int) -> int:
    """Capacity after growth: x1.5 rounded up, at least 1, at least ``needed``."""
    return max(needed, math.ceil(capacity * 1.5), 1)


def _ensure(arr: array, needed: int, fill=0) -> None:
    cap = len(arr)
    if needed > cap:
        arr.extend(array(arr.typecode, [fill]) * (grown_capacity(cap, needed) - cap))


def _int_view(arr: array, count: int) -> np.ndarray:
    if count == 0:
        return np.empty(0, dtype=np.int32)
    return np.frombuffer(arr, dtype=np.int32, count=count)


def _float_view(arr: array, count: int) -> np.ndarray:
    if count == 0:
        return np.empty(0, dtype=np.float64)
    return np.frombuffer(arr, dtype=np.float64, count=count)


@dataclass
class OpStats:
    """Operation counters used to check complexity contracts.

    ``probes`` counts primitive reads performed by adjacency tests (bitset
    words or scanned adjacency cells); ``cell_moves`` counts adjacency cells
    relocated by swap-removal.
    """

    probes: int = 0
    cell_moves: int = 0

    def reset(self):
        self.probes = 0
        self.cell_moves = 0


@dataclass(frozen=True)
class CSR:
    """Flat, read-only snapshot of the adjacency columns.

    ``targets`` holds internal positions (not ids); ``ids`` maps positions
    back to vertex ids.
    """

    offsets: np.ndarray
    targets: np.ndarray
    weights: np.ndarray
    ids: np.ndarray

    @property
    def num_vertices(self) -> int:
        return len(self.offsets) - 1


class Graph:
    """Simple undirected graph; base of the whole kind hierarchy.

    Vertices are non-negative 32-bit integers, ``0 .. n-1`` by default.
    Instances are normally created through :class:`GraphBuilder` or the
    generator functions, but the constructor gives an empty graph.

    Args:
        name: optional display name.
        vertex_capacity: initial capacity of the vertex columns.
        adjacency_capacity: initial capacity of each adjacency list.
        bitset_threshold: degree at which a vertex gets an adjacency bitset;
            ``None`` means ``ceil(sqrt(n))`` at insertion time.
    """

    kind: GraphKind = GRAPH

    def __init__(
        self,
        name: str | None = None,
        *,
        vertex_capacity: int = 0,
        adjacency_capacity: int = DEFAULT_ADJACENCY_CAPACITY,
        bitset_threshold: int | None = None,
    ):
        cap = max(int(vertex_capacity), 0)
        self.name = name
        self._n = 0
        self._m = 0
        self._next_id = 0
        self._mod = 0
        self._wver = 0
        self._vertices = array("i", bytes(4 * cap))
        self._deg = array("i", bytes(4 * cap))
        self._adj: list[array] = []
        self._init_orientation(cap)
        self._adjacency_capacity = max(int(adjacency_capacity), 1)
        self._bitset_threshold = bitset_threshold
        self._vweights: array | None = None
        self._vlabels: list | None = None
        self._eweights: list[array] | None = None
        self._elabels: list[list] | None = None
        self._bits: list[array | None] | None = None
        self._index: dict[int, int] | None = None
        self._vlabel_map: dict | None = None
        self._elabel_map: dict | None = None
        self._loops: dict[int, int] | None = {} if self.kind.allows_self_loops else None
        self._csr_cache: dict = {}
        self.stats = OpStats()

    def _init_orientation(self, cap):
        self._pos: list[array] = []

    # ------------------------------------------------------------------ basics

    @property
    def directed(self) -> bool:
        return self.kind.directed

    @property
    def num_vertices(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return self._m

    def __len__(self):
        return self._n

    def __contains__(self, v):
        return self.contains_vertex(v)

    def __repr__(self):
        name = f" {self.name!r}" if self.name else ""
        return f"<{type(self).__name__}{name} n={self._n} m={self._m}>"

    @property
    def bitset_threshold(self) -> int:
        """Degree at which adjacency bitsets are activated."""
        t = self._bitset_threshold
        if t is not None:
            return t
        return math.isqrt(self._n - 1) + 1 if self._n > 0 else 1

    @bitset_threshold.setter
    def bitset_threshold(self, value: int | None):
        if value is not None and value < 1:
            raise ValueError("bitset threshold must be >= 1")
        self._bitset_threshold = value

    @property
    def modification_count(self) -> int:
        return self._mod

    # ---------------------------------------------------------------- vertices

    def _idx(self, v) -> int:
        index = self._index
        if index is None:
            if 0 <= v < self._n:
                return int(v)
            raise VertexNotFoundError(v)
        try:
            return index[v]
        except (KeyError, TypeError):
            raise VertexNotFoundError(v) from None

    def index_of(self, v: int) -> int:
        """Internal position of vertex ``v`` in the vertex columns."""
        return self._idx(v)

    def vertex_at(self, i: int) -> int:
        if not 0 <= i < self._n:
            raise IndexError(i)
        return self._vertices[i]

    def contains_vertex(self, v) -> bool:
        if self._index is None:
            try:
                return 0 <= v < self._n
            except TypeError:
                return False
        return v in self._index

    def vertices(self) -> list[int]:
        return self._vertices[: self._n].tolist()

    def has_default_vertices(self) -> bool:
        """True while ``vertices[i] == i`` for every position."""
        return self._index is None

    @property
    def next_vertex_id(self) -> int:
        return self._next_id

    def add_vertex(self, v: int | None = None) -> int:
        """Append a vertex and return its id (the next default id if omitted)."""
        if v is None:
            v = self._next_id
            if v > INT32_MAX:
                raise InvalidVertexError("vertex id space exhausted")
        else:
            v = operator.index(v)
            if v < 0 or v > INT32_MAX:
                raise InvalidVertexError(f"vertex ids must be in 0..{INT32_MAX}, got {v}")
            if self.contains_vertex(v):
                raise DuplicateVertexError(v)
        i = self._n
        if self._index is None and v != i:
            self._index = {j: j for j in range(i)}
        if self._index is not None:
            self._index[v] = i
        _ensure(self._vertices, i + 1)
        _ensure(self._deg, i + 1)
        self._vertices[i] = v
        self._deg[i] = 0
        self._append_vertex_columns(i, self._adjacency_capacity)
        self._n = i + 1
        if v >= self._next_id:
            self._next_id = v + 1
        self._mod += 1
        if self._vlabel_map is not None:
            self._vlabel_map = None
        return v

    def add_vertices(self, count: int) -> list[int]:
        """Append ``count`` vertices with the next default ids."""
        start = self._next_id
        self._add_default_vertices(count)
        return list(range(start, start + count))

    def _add_default_vertices(self, count, cap=None):
        start = self._n
        if self._index is not None or self._next_id != start:
            for _ in range(count):
                self.add_vertex()
            return
        if start + count - 1 > INT32_MAX:
            raise InvalidVertexError("vertex id space exhausted")
        cap = self._adjacency_capacity if cap is None else max(int(cap), 1)
        end = start + count
        _ensure(self._vertices, end)
        _ensure(self._deg, end)
        self._vertices[start:end] = array("i", range(start, end))
        self._deg[start:end] = array("i", bytes(4 * count))
        for i in range(start, end):
            self._append_vertex_columns(i, cap)
        self._n = end
        self._next_id = end
        self._mod += 1
        self._vlabel_map = None

    def _append_vertex_columns(self, i, cap):
        self._adj.append(array("i", bytes(4 * cap)))
        self._pos.append(array("i", bytes(4 * cap)))
        self._append_lazy_vertex_columns(i, cap)

    def _append_lazy_vertex_columns(self, i, cap):
        if self._vweights is not None:
            _ensure(self._vweights, i + 1, DEFAULT_WEIGHT)
            self._vweights[i] = DEFAULT_WEIGHT
        if self._vlabels is not None:
            self._vlabels.append(None)
        if self._eweights is not None:
            self._eweights.append(array("d", [DEFAULT_WEIGHT]) * cap)
        if self._elabels is not None:
            self._elabels.append([None] * cap)
        if self._bits is not None:
            self._bits.append(None)

    def remove_vertex(self, v: int) -> None:
        """Remove ``v`` and its incident edges; O(d(v)).

        The last vertex is moved into the freed position, which switches the
        graph to an explicit vertex-to-index map unless ``v`` was last.
        """
        k = self._idx(v)
        self._detach(k)
        last = self._n - 1
        if self._vlabels is not None and self._vlabel_map is not None:
            self._vlabel_map = None
        if k != last:
            if self._index is None:
                self._index = {j: j for j in range(self._n)}
            self._move_vertex(last, k)
        self._pop_vertex_columns()
        self._n = last
        if self._index is not None:
            del self._index[v]
        if self._loops:
            self._loops.pop(v, None)
        self._mod += 1

    def _detach(self, k):
        deg = self._deg
        while deg[k]:
            self._remove_at(k, deg[k] - 1)

    def _move_vertex(self, src, dst):
        w = self._vertices[src]
        self._vertices[dst] = w
        self._deg[dst] = self._deg[src]
        self._index[w] = dst
        self._move_per_index_lists(src, dst)
        if self._bits is not None:
            self._rekey_bits(w, src, dst, self._adj[dst], self._deg[dst])

    def _move_per_index_lists(self, src, dst):
        self._adj[dst] = self._adj[src]
        self._pos[dst] = self._pos[src]
        self._move_lazy_vertex_columns(src, dst)

    def _move_lazy_vertex_columns(self, src, dst):
        if self._vweights is not None:
            self._vweights[dst] = self._vweights[src]
        if self._vlabels is not None:
            self._vlabels[dst] = self._vlabels[src]
        if self._eweights is not None:
            self._eweights[dst] = self._eweights[src]
        if self._elabels is not None:
            self._elabels[dst] = self._elabels[src]
        if self._bits is not None:
            self._bits[dst] = self._bits[src]

    def _rekey_bits(self, w, src, dst, holders_row, holders_count):
        # vertices whose bitset has bit `src` set are the ones listing w
        bits = self._bits
        for x in set(holders_row[:holders_count].tolist()):
            c = dst if x == w else self._idx(x)
            word = bits[c]
            if word is not None:
                self._clear_bit(word, src)
                self._set_bit(c, dst)

    def _pop_vertex_columns(self):
        self._adj.pop()
        self._pos.pop()
        self._pop_lazy_columns()

    def _pop_lazy_columns(self):
        if self._vlabels is not None:
            self._vlabels.pop()
        if self._eweights is not None:
            self._eweights.pop()
        if self._elabels is not None:
            self._elabels.pop()
        if self._bits is not None:
            self._bits.pop()

    # ------------------------------------------------------------------ degree

    def degree(self, v: int) -> int:
        """Number of adjacency cells of ``v`` (a self-loop counts twice)."""
        return self._deg[self._idx(v)]

    def degrees(self) -> np.ndarray:
        return _int_view(self._deg, self._n).copy()

    def _require_directed(self, what):
        raise UnsupportedKindError(f"{what} is only defined for directed graphs")

    def indegree(self, v):
        self._require_directed("indegree")

    def outdegree(self, v):
        self._require_directed("outdegree")

    def successors(self, v):
        self._require_directed("successors")

    def predecessors(self, v):
        self._require_directed("predecessors")

    def successor_iterator(self, v):
        self._require_directed("successor iteration")

    def predecessor_iterator(self, v):
        self._require_directed("predecessor iteration")

    def multiplicity(self, v, u) -> int:
        """0 or 1 in simple kinds; multigraph kinds count parallel copies."""
        return int(self.contains_edge(v, u))

    def edges_between(self, v, u):
        raise UnsupportedKindError("edges_between is only defined for multigraph kinds")

    def self_loops(self, v):
        raise UnsupportedKindError("self_loops is only defined for pseudograph kinds")

    # ------------------------------------------------------------------ bitset

    def has_bitset(self, v: int) -> bool:
        bits = self._bits
        return bits is not None and bits[self._idx(v)] is not None

    def _set_bit(self, a, b):
        word = self._bits[a]
        q = b >> 6
        if q >= len(word):
            word.extend(_ONE_WORD * (max((self._n + 63) >> 6, q + 1) - len(word)))
        word[q] |= 1 << (b & 63)

    @staticmethod
    def _clear_bit(word, b):
        q = b >> 6
        if q < len(word):
            word[q] &= ~(1 << (b & 63)) & 0xFFFFFFFFFFFFFFFF

    def _test_bit(self, word, b):
        self.stats.probes += 1
        q = b >> 6
        return q < len(word) and (word[q] >> (b & 63)) & 1 == 1

    def _bitset_row(self, a) -> tuple[array, int]:
        return self._adj[a], self._deg[a]

    def _activate_bitset(self, a):
        if self._bits is None:
            self._bits = [None] * self._n
        row, d = self._bitset_row(a)
        targets = self._positions_of(_int_view(row, d))
        nwords = max((self._n + 63) >> 6, 1)
        flags = np.zeros(nwords * 64, dtype=bool)
        flags[targets] = True
        word = array("Q")
        word.frombytes(np.packbits(flags, bitorder="little").tobytes())
        self._bits[a] = word

    def _maybe_activate(self, a):
        if self._deg[a] >= self.bitset_threshold:
            bits = self._bits
            if bits is None or bits[a] is None:
                self._activate_bitset(a)

    def _positions_of(self, ids: np.ndarray) -> np.ndarray:
        """Map an array of vertex ids to internal positions."""
        if self._index is None:
            return ids.astype(np.int64)
        order, sorted_ids = self._sorted_ids()
        return order[np.searchsorted(sorted_ids, ids)]

    def _sorted_ids(self):
        key = ("sorted-ids", self._mod)
        hit = self._csr_cache.get(key)
        if hit is None:
            ids = _int_view(self._vertices, self._n)
            order = np.argsort(ids, kind="stable")
            hit = (order, ids[order])
            self._csr_cache = {k: v for k, v in self._csr_cache.items() if k[1] == self._mod}
            self._csr_cache[key] = hit
        return hit

    # ------------------------------------------------------------------- edges

    def _check_new_edge(self, a, b, v, u):
        if a == b and not self.kind.allows_self_loops:
            raise SelfLoopError(v)
        if not self.kind.allows_multiple_edges and self._has(a, b):
            raise DuplicateEdgeError(v, u)

    def add_edge(self, v: int, u: int, weight: float | None = None, label: Any = None) -> Edge:
        """Add edge ``vu``; amortized O(1) plus the O(1)/O(sqrt n) duplicate test."""
        a = self._idx(v)
        b = self._idx(u)
        self._check_new_edge(a, b, v, u)
        i, j = self._link(a, b, v, u)
        if weight is not None:
            self._write_weight(a, i, b, j, float(weight))
        if label is not None:
            self._write_label(a, i, b, j, label)
        self._m += 1
        self._mod += 1
        return Edge(v, u, self.kind.directed, None if weight is None else float(weight), label, (v, i))

    def _ensure_cells(self, a, needed):
        row = self._adj[a]
        cap = len(row)
        if needed <= cap:
            return
        new = grown_capacity(cap, needed)
        extra = new - cap
        zeros = array("i", [0]) * extra
        row.extend(zeros)
        self._pos[a].extend(zeros)
        if self._eweights is not None:
            self._eweights[a].extend(array("d", [DEFAULT_WEIGHT]) * extra)
        if self._elabels is not None:
            self._elabels[a].extend([None] * extra)

    def _append_cell(self, a, neighbor):
        i = self._deg[a]
        self._ensure_cells(a, i + 1)
        self._adj[a][i] = neighbor
        self._deg[a] = i + 1
        return i

    def _link(self, a, b, v, u):
        i = self._append_cell(a, u)
        j = self._append_cell(b, v)
        self._pos[a][i] = j
        self._pos[b][j] = i
        bits = self._bits
        if bits is not None:
            if bits[a] is not None:
                self._set_bit(a, b)
            if bits[b] is not None:
                self._set_bit(b, a)
        self._maybe_activate(a)
        if b != a:
            self._maybe_activate(b)
        elif self._loops is not None:
            self._loops[v] = self._loops.get(v, 0) + 1
        return i, j

    def _has(self, a, b) -> bool:
        bits = self._bits
        if bits is not None:
            word = bits[a]
            if word is not None:
                return self._test_bit(word, b)
            word = bits[b]
            if word is not None:
                return self._test_bit(word, a)
        deg = self._deg
        if deg[b] < deg[a]:
            a, b = b, a
        return self._scan(self._adj[a], deg[a], self._vertices[b]) >= 0

    def _scan(self, row, d, target) -> int:
        try:
            i = row.index(target, 0, d)
        except ValueError:
            self.stats.probes += d
            return -1
        self.stats.probes += i + 1
        return i

    def contains_edge(self, v: int, u: int) -> bool:
        """Adjacency test: bitset lookup when active, otherwise a scan."""
        return self._has(self._idx(v), self._idx(u))

    def _find_slot(self, a, v, u) -> int:
        i = self._scan_quiet(self._adj[a], self._deg[a], u)
        if i < 0:
            raise EdgeNotFoundError(v, u)
        return i

    @staticmethod
    def _scan_quiet(row, d, target) -> int:
        try:
            return row.index(target, 0, d)
        except ValueError:
            return -1

    def remove_edge(self, v: int, u: int) -> None:
        """Remove one edge ``vu`` (the lowest slot of ``v``'s list); O(d(v))."""
        a = self._idx(v)
        self._idx(u)
        self._remove_at(a, self._find_slot(a, v, u))

    def remove_edge_handle(self, edge: Edge) -> None:
        """Remove the edge at the slot recorded in ``edge``; O(1)."""
        a, i = self._resolve(edge)
        self._remove_at(a, i)

    def _resolve(self, edge: Edge) -> tuple[int, int]:
        if edge.slot is None:
            a = self._idx(edge.source)
            return a, self._find_slot(a, edge.source, edge.target)
        owner, i = edge.slot
        if not self.contains_vertex(owner):
            raise StaleEdgeError(f"{edge}: owner vertex {owner} no longer exists")
        a = self._idx(owner)
        other = edge.other(owner) if not self.kind.directed else edge.target
        if not (0 <= i < self._deg[a] and self._adj[a][i] == other):
            raise StaleEdgeError(f"{edge}: slot {edge.slot} no longer holds this edge")
        return a, i

    def _remove_at(self, a, i):
        row = self._adj[a]
        u = row[i]
        j = self._pos[a][i]
        va = self._vertices[a]
        if u == va:
            hi, lo = (i, j) if i > j else (j, i)
            self._drop(a, hi)
            self._drop(a, lo)
            self._after_unlink(a, a, va, u)
        else:
            b = self._idx(u)
            self._drop(a, i)
            self._drop(b, j)
            self._after_unlink(a, b, va, u)

    def _remove_at_cursor(self, a, i) -> int:
        """Iterator removal; returns the slot the iterator must visit next."""
        u = self._adj[a][i]
        j = self._pos[a][i]
        va = self._vertices[a]
        if u != va or j > i:
            self._remove_at(a, i)
            return i
        # a loop whose other cell was already visited: keep visited cells
        # below the cursor and pull unvisited ones down from the end
        self._forget_label(a, i)
        self._forget_label(a, j)
        if j != i - 1:
            self._move_cell(a, i - 1, j)
        self._drop(a, i, forget=False)
        self._drop(a, i - 1, forget=False)
        self._after_unlink(a, a, va, u)
        return i - 1

    def _after_unlink(self, a, b, va, u):
        bits = self._bits
        if bits is not None:
            multi = self.kind.allows_multiple_edges
            word = bits[a]
            if word is not None and not (multi and self._scan_quiet(self._adj[a], self._deg[a], u) >= 0):
                self._clear_bit(word, b)
            if b != a:
                word = bits[b]
                if word is not None and not (multi and self._scan_quiet(self._adj[b], self._deg[b], va) >= 0):
                    self._clear_bit(word, a)
        if a == b and self._loops is not None:
            left = self._loops[va] - 1
            if left:
                self._loops[va] = left
            else:
                del self._loops[va]
        self._m -= 1
        self._mod += 1

    def _drop(self, a, i, forget=True):
        last = self._deg[a] - 1
        if forget:
            self._forget_label(a, i)
        if i != last:
            self._move_cell(a, last, i)
        self._deg[a] = last
        # freed cells must read as defaults when an edge is appended later
        if self._eweights is not None:
            self._eweights[a][last] = DEFAULT_WEIGHT
        if self._elabels is not None:
            self._elabels[a][last] = None

    def _move_cell(self, a, s, t):
        row = self._adj[a]
        pos = self._pos[a]
        w = row[s]
        k = pos[s]
        row[t] = w
        pos[t] = k
        c = a if w == self._vertices[a] else self._idx(w)
        self._pos[c][k] = t
        self._move_cell_payload(a, s, t)

    def _move_cell_payload(self, a, s, t):
        if self._eweights is not None:
            ew = self._eweights[a]
            ew[t] = ew[s]
        if self._elabels is not None:
            el = self._elabels[a]
            label = el[s]
            el[t] = label
            lm = self._elabel_map
            if lm is not None and label is not None:
                va = self._vertices[a]
                if lm.get(label) == (va, s):
                    lm[label] = (va, t)
        self.stats.cell_moves += 1

    def _forget_label(self, a, i):
        lm = self._elabel_map
        if lm is not None:
            label = self._elabels[a][i]
            if label is not None and lm.get(label) == (self._vertices[a], i):
                # another edge may carry the same label; rebuild on demand
                self._elabel_map = None

    # --------------------------------------------------------------- iteration

    def neighbors(self, v: int) -> list[int]:
        a = self._idx(v)
        return self._adj[a][: self._deg[a]].tolist()

    def neighbor_iterator(self, v: int) -> NeighborIterator:
        """Cursor over ``(neighbor, slot)`` pairs supporting O(1) removal."""
        return NeighborIterator(self, self._idx(v))

    def edges(self) -> Iterator[Edge]:
        """Every edge once, in (owner position, slot) order.

        An undirected edge is reported from its lower-position endpoint; a
        self-loop from its lower slot.
        """
        vertices = self._vertices
        ew = self._eweights
        el = self._elabels
        for a in range(self._n):
            va = vertices[a]
            row = self._adj[a]
            pos = self._pos[a]
            for i in range(self._deg[a]):
                u = row[i]
                b = a if u == va else self._idx(u)
                if a < b or (a == b and i < pos[i]):
                    yield Edge(
                        va,
                        u,
                        False,
                        None if ew is None else ew[a][i],
                        None if el is None else el[a][i],
                        (va, i),
                    )

    def edge(self, v: int, u: int) -> Edge:
        a = self._idx(v)
        self._idx(u)
        return self._edge_at(a, self._find_slot(a, v, u))

    def _edge_at(self, a, i) -> Edge:
        va = self._vertices[a]
        ew = self._eweights
        el = self._elabels
        return Edge(
            va,
            self._adj[a][i],
            self.kind.directed,
            None if ew is None else ew[a][i],
            None if el is None else el[a][i],
            (va, i),
        )

    # ------------------------------------------------------ weights and labels

    def is_vertex_weighted(self) -> bool:
        return self._vweights is not None

    def is_edge_weighted(self) -> bool:
        return self._eweights is not None

    def is_vertex_labeled(self) -> bool:
        return self._vlabels is not None

    def is_edge_labeled(self) -> bool:
        return self._elabels is not None

    def get_vertex_weight(self, v: int) -> float:
        a = self._idx(v)
        return DEFAULT_WEIGHT if self._vweights is None else self._vweights[a]

    def set_vertex_weight(self, v: int, weight: float) -> None:
        a = self._idx(v)
        if self._vweights is None:
            self._vweights = array("d", [DEFAULT_WEIGHT]) * max(len(self._vertices), self._n)
        self._vweights[a] = weight

    def get_vertex_label(self, v: int):
        a = self._idx(v)
        return None if self._vlabels is None else self._vlabels[a]

    def set_vertex_label(self, v: int, label) -> None:
        a = self._idx(v)
        if self._vlabels is None:
            self._vlabels = [None] * self._n
        old = self._vlabels[a]
        self._vlabels[a] = label
        lm = self._vlabel_map
        if lm is not None:
            if old is not None and lm.get(old) == v:
                self._vlabel_map = None
            elif label is not None:
                current = lm.get(label)
                if current is None or self._idx(current) > a:
                    lm[label] = v

    def _materialize_edge_weights(self):
        if self._eweights is None:
            self._eweights = [array("d", [DEFAULT_WEIGHT]) * len(row) for row in self._adj]

    def _materialize_edge_labels(self):
        if self._elabels is None:
            self._elabels = [[None] * len(row) for row in self._adj]

    def _write_weight(self, a, i, b, j, weight):
        self._materialize_edge_weights()
        self._eweights[a][i] = weight
        self._eweights[b][j] = weight
        self._wver += 1

    def _write_label(self, a, i, b, j, label):
        self._materialize_edge_labels()
        self._forget_label(a, i)
        self._forget_label(b, j)
        self._elabels[a][i] = label
        self._elabels[b][j] = label
        lm = self._elabel_map
        if lm is not None and label is not None and label not in lm:
            lm[label] = (self._vertices[a], i)

    def _mirror(self, a, i) -> tuple[int, int]:
        u = self._adj[a][i]
        b = a if u == self._vertices[a] else self._idx(u)
        return b, self._pos[a][i]

    def get_edge_weight(self, v: int, u: int) -> float:
        """Weight of edge ``vu``; 1.0 when the graph was never weighted."""
        a = self._idx(v)
        i = self._find_slot(a, v, u)
        return DEFAULT_WEIGHT if self._eweights is None else self._eweights[a][i]

    def set_edge_weight(self, v: int, u: int, weight: float) -> None:
        a = self._idx(v)
        i = self._find_slot(a, v, u)
        b, j = self._mirror(a, i)
        self._write_weight(a, i, b, j, float(weight))

    def get_edge_label(self, v: int, u: int):
        a = self._idx(v)
        i = self._find_slot(a, v, u)
        return None if self._elabels is None else self._elabels[a][i]

    def set_edge_label(self, v: int, u: int, label) -> None:
        a = self._idx(v)
        i = self._find_slot(a, v, u)
        b, j = self._mirror(a, i)
        self._write_label(a, i, b, j, label)

    def find_vertex(self, label):
        """Vertex carrying ``label`` (the lowest position on ties) or None."""
        if self._vlabels is None:
            return None
        lm = self._vlabel_map
        if lm is None:
            lm = {}
            vertices = self._vertices
            for a, lab in enumerate(self._vlabels):
                if lab is not None and lab not in lm:
                    lm[lab] = vertices[a]
            self._vlabel_map = lm
        return lm.get(label)

    def find_edge(self, label) -> Edge | None:
        if self._elabels is None:
            return None
        lm = self._elabel_map
        if lm is None:
            lm = {}
            vertices = self._vertices
            for a in range(self._n):
                el = self._elabels[a]
                for i in range(self._deg[a]):
                    lab = el[i]
                    if lab is not None and lab not in lm:
                        lm[lab] = (vertices[a], i)
            self._elabel_map = lm
        hit = lm.get(label)
        if hit is None:
            return None
        return self._edge_at(self._idx(hit[0]), hit[1])

    def find_all_vertices(self, label) -> list[int]:
        if self._vlabels is None:
            return []
        vertices = self._vertices
        return [vertices[a] for a, lab in enumerate(self._vlabels) if lab == label]

    def find_all_edges(self, label) -> list[Edge]:
        if self._elabels is None:
            return []
        return [e for e in self.edges() if e.label == label]

    # ------------------------------------------------------------ bulk loading

    def _bulk_add_edges(self, a: np.ndarray, b: np.ndarray, weights=None, labels=None, trusted=False) -> None:
        """Vectorized insertion of edges given by internal positions.

        ``trusted`` skips the kind checks; only for edge sets that are valid
        by construction.
        """
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        count = len(a)
        if count == 0:
            return
        if not trusted:
            self._validate_bulk(a, b)
        self._bulk_link(a, b, weights, labels)
        self._m += count
        self._mod += 1
        self._activate_bulk()

    def _validate_bulk(self, a, b):
        ids = _int_view(self._vertices, self._n).copy()
        if not self.kind.allows_self_loops:
            loops = np.flatnonzero(a == b)
            if len(loops):
                raise SelfLoopError(int(ids[a[loops[0]]]))
        if self.kind.allows_multiple_edges:
            return
        if self.kind.directed:
            keys = a * self._n + b
        else:
            keys = np.minimum(a, b) * self._n + np.maximum(a, b)
        if self._m:
            old_a, old_b = self._edge_positions()
            if self.kind.directed:
                old = old_a * self._n + old_b
            else:
                old = np.minimum(old_a, old_b) * self._n + np.maximum(old_a, old_b)
            clash = np.flatnonzero(np.isin(keys, old))
            if len(clash):
                c = clash[0]
                raise DuplicateEdgeError(int(ids[a[c]]), int(ids[b[c]]))
        order = np.argsort(keys, kind="stable")
        dup = np.flatnonzero(keys[order][1:] == keys[order][:-1])
        if len(dup):
            c = order[dup[0] + 1]
            raise DuplicateEdgeError(int(ids[a[c]]), int(ids[b[c]]))

    def _edge_positions(self):
        src, dst = [], []
        for e in self.edges():
            src.append(self._idx(e.source))
            dst.append(self._idx(e.target))
        return np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64)

    @staticmethod
    def _group_slots(owner: np.ndarray, start_deg: np.ndarray, n: int):
        """Slot assigned to each new cell when appended in input order."""
        order = np.argsort(owner, kind="stable")
        counts = np.bincount(owner, minlength=n)
        starts = np.zeros(n, dtype=np.int64)
        np.cumsum(counts[:-1], out=starts[1:])
        sorted_owner = owner[order]
        slots = np.empty(len(owner), dtype=np.int64)
        slots[order] = start_deg[sorted_owner] + (np.arange(len(owner)) - starts[sorted_owner])
        return order, counts, starts, slots

    def _write_blocks(self, columns, owner_counts, order, starts, payload, base_deg):
        """Write per-owner blocks of new cells into the adjacency columns."""
        for a in np.flatnonzero(owner_counts).tolist():
            cnt = int(owner_counts[a])
            lo = int(starts[a])
            d0 = int(base_deg[a])
            self._ensure_cells_for(columns, a, d0 + cnt)
            sel = order[lo : lo + cnt]
            for column, values in zip(columns, payload):
                if values is None:
                    continue
                row = column[a]
                view = np.frombuffer(row, dtype=np.int32 if row.typecode == "i" else np.float64, count=d0 + cnt)
                view[d0:] = values[sel]
                del view

    def _ensure_cells_for(self, columns, a, needed):
        self._ensure_cells(a, needed)

    def _bulk_link(self, a, b, weights, labels):
        n = self._n
        count = len(a)
        ids = _int_view(self._vertices, n).astype(np.int64)
        owner = np.concatenate([a, b])
        neighbor = np.concatenate([ids[b], ids[a]]).astype(np.int32)
        base = _int_view(self._deg, n).astype(np.int64)
        order, counts, starts, slots = self._group_slots(owner, base, n)
        partner = np.concatenate([slots[count:], slots[:count]]).astype(np.int32)
        if weights is not None:
            self._materialize_edge_weights()
            w = np.asarray(weights, dtype=np.float64)
            wcells = np.concatenate([w, w])
        else:
            wcells = None
        columns = [self._adj, self._pos] + ([self._eweights] if wcells is not None else [])
        payload = [neighbor, partner] + ([wcells] if wcells is not None else [])
        self._write_blocks(columns, counts, order, starts, payload, base)
        newdeg = (base + counts).astype(np.int32)
        np.frombuffer(self._deg, dtype=np.int32, count=n)[:] = newdeg
        if labels is not None:
            self._materialize_edge_labels()
            for e, label in enumerate(labels):
                if label is not None:
                    for c in (e, e + count):
                        self._elabels[int(owner[c])][int(slots[c])] = label
            self._elabel_map = None
        if self._loops is not None:
            loop_owners = a[a == b]
            for x, c in zip(*np.unique(loop_owners, return_counts=True)):
                vid = int(ids[x])
                self._loops[vid] = self._loops.get(vid, 0) + int(c)
        if self._bits is not None:
            for x, y in zip(a.tolist(), b.tolist()):
                if self._bits[x] is not None:
                    self._set_bit(x, y)
                if self._bits[y] is not None:
                    self._set_bit(y, x)

    def _activate_bulk(self):
        threshold = self.bitset_threshold
        deg = _int_view(self._deg, self._n)
        for a in np.flatnonzero(deg >= threshold).tolist():
            if self._bits is None or self._bits[a] is None:
                self._activate_bitset(a)

    # ---------------------------------------------------------------- snapshot

    def csr(self) -> CSR:
        """Flat snapshot of the (out-)adjacency; cached until the next change."""
        return self._cached_csr("out")

    def _cached_csr(self, side):
        key = (side, self._mod)
        hit = self._csr_cache.get(key)
        if hit is None:
            hit = (self._build_csr(side), self._wver)
            self._csr_cache = {k: v for k, v in self._csr_cache.items() if k[1] == self._mod}
            self._csr_cache[key] = hit
        elif hit[1] != self._wver:
            # weights changed without a structural modification
            old = hit[0]
            hit = (CSR(old.offsets, old.targets, self._gather_weights(side, old.offsets), old.ids), self._wver)
            self._csr_cache[key] = hit
        return hit[0]

    def _rows(self, side):
        return self._adj, self._deg

    def _build_csr(self, side) -> CSR:
        n = self._n
        rows, deg = self._rows(side)
        counts = _int_view(deg, n).astype(np.int64)
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=offsets[1:])
        if n and offsets[-1]:
            flat = np.concatenate([_int_view(rows[a], int(counts[a])) for a in range(n)])
        else:
            flat = np.empty(0, dtype=np.int32)
        targets = self._positions_of(flat).astype(np.int32)
        weights = self._gather_weights(side, offsets)
        ids = _int_view(self._vertices, n).copy()
        return CSR(offsets, targets, weights, ids)

    def _gather_weights(self, side, offsets=None):
        n = self._n
        if offsets is None:
            counts = _int_view(self._rows(side)[1], n).astype(np.int64)
            total = int(counts.sum())
        else:
            total = int(offsets[-1])
        if self._eweights is None or total == 0:
            return np.ones(total, dtype=np.float64)
        deg = self._deg
        return np.concatenate([_float_view(self._eweights[a], deg[a]) for a in range(n)])

    # -------------------------------------------------------------------- copy

    def copy(self) -> Graph:
        """Deep copy of every column; the copy is fully independent."""
        g = self.__class__.__new__(self.__class__)
        g.__dict__.update(self.__dict__)
        g._vertices = array("i", self._vertices)
        g._deg = array("i", self._deg)
        g._adj = [array("i", r) for r in self._adj]
        self._copy_orientation(g)
        if self._vweights is not None:
            g._vweights = array("d", self._vweights)
        if self._vlabels is not None:
            g._vlabels = list(self._vlabels)
        if self._eweights is not None:
            g._eweights = [array("d", r) for r in self._eweights]
        if self._elabels is not None:
            g._elabels = [list(r) for r in self._elabels]
        if self._bits is not None:
            g._bits = [None if w is None else array("Q", w) for w in self._bits]
        for attr in ("_index", "_vlabel_map", "_elabel_map", "_loops"):
            value = getattr(self, attr)
            if value is not None:
                setattr(g, attr, dict(value))
        g._csr_cache = {}
        g.stats = OpStats()
        return g

    def _copy_orientation(self, g):
        g._pos = [array("i", r) for r in self._pos]

    # -------------------------------------------------------------- invariants

    def check_invariants(self) -> None:
        """Verify every structural invariant; raises AssertionError on failure."""
        n = self._n
        self._check_vertex_columns()
        adj, pos, deg, vertices = self._adj, self._pos, self._deg, self._vertices
        total = 0
        loops: dict[int, int] = {}
        for a in range(n):
            va = vertices[a]
            d = deg[a]
            assert 0 <= d <= len(adj[a]) == len(pos[a]), f"capacity of {va}"
            total += d
            row = adj[a][:d].tolist()
            if not self.kind.allows_multiple_edges:
                assert len(set(row)) == d, f"duplicate neighbor at {va}"
            if not self.kind.allows_self_loops:
                assert va not in row, f"self cell at {va}"
            for i in range(d):
                u = row[i]
                b = self._idx(u)
                j = pos[a][i]
                assert 0 <= j < deg[b], f"position out of range at ({va},{i})"
                assert adj[b][j] == va, f"mirror broken at ({va},{i})"
                assert pos[b][j] == i, f"mirror position broken at ({va},{i})"
                if u == va:
                    assert j != i, f"loop cell mirrors itself at ({va},{i})"
                    if i < j:
                        loops[va] = loops.get(va, 0) + 1
                if self._eweights is not None:
                    assert self._eweights[b][j] == self._eweights[a][i], f"weight mirror at ({va},{i})"
                if self._elabels is not None:
                    assert self._elabels[b][j] == self._elabels[a][i], f"label mirror at ({va},{i})"
            self._check_bitset(a, row)
        assert total == 2 * self._m, f"sum of degrees {total} != 2m = {2 * self._m}"
        if self._loops is not None:
            assert loops == self._loops, f"self-loop map {self._loops} != {loops}"

    def _check_vertex_columns(self):
        n = self._n
        vertices = self.vertices()
        assert len(set(vertices)) == n, "duplicate vertex ids"
        assert all(0 <= v <= INT32_MAX for v in vertices)
        assert len(self._adj) == n
        if self._index is None:
            assert vertices == list(range(n)), "default vertices expected"
        else:
            assert self._index == {v: i for i, v in enumerate(vertices)}, "vertex-to-index map stale"
        assert all(v < self._next_id for v in vertices)
        for column in (self._vlabels, self._eweights, self._elabels, self._bits):
            assert column is None or len(column) == n

    def _check_bitset(self, a, row):
        bits = self._bits
        if bits is None or bits[a] is None:
            return
        word = bits[a]
        expected = {self._idx(u) for u in row}
        got = set()
        for q, w in enumerate(word):
            while w:
                low = w & -w
                got.add(q * 64 + low.bit_length() - 1)
                w ^= low
        assert got == expected, f"bitset of {self._vertices[a]} incoherent"


class NeighborIterator:
    """Cursor over the adjacency cells of one vertex.

    Yields ``(neighbor, slot)``. ``remove()`` deletes the edge under the
    cursor in O(1); the iteration then continues without skipping or
    repeating any live cell. Structural changes made through any other path
    raise :class:`ConcurrentModificationError` on the next step.
    """

    __slots__ = ("_g", "_a", "_rows", "_next", "_cur", "_expected", "_side")

    def __init__(self, g: Graph, a: int, side: str = "out"):
        self._g = g
        self._a = a
        self._side = side
        self._next = 0
        self._cur = -1
        self._expected = g._mod

    def __iter__(self):
        return self

    def _row_and_degree(self):
        return self._g._adj[self._a], self._g._deg[self._a]

    def __next__(self):
        g = self._g
        if g._mod != self._expected:
            raise ConcurrentModificationError("graph modified during iteration")
        row, d = self._row_and_degree()
        i = self._next
        if i >= d:
            self._cur = -1
            raise StopIteration
        self._cur = i
        self._next = i + 1
        return row[i], i

    def _current(self) -> int:
        if self._cur < 0:
            raise RuntimeError("no current element: call next() first")
        return self._cur

    @property
    def vertex(self) -> int:
        return self._g._vertices[self._a]

    def remove(self) -> None:
        i = self._current()
        self._next = self._g._remove_at_cursor(self._a, i)
        self._cur = -1
        self._expected = self._g._mod

    def _weight_cell(self):
        return self._a, self._current()

    @property
    def weight(self) -> float:
        a, i = self._weight_cell()
        ew = self._g._eweights
        return DEFAULT_WEIGHT if ew is None else ew[a][i]

    def set_weight(self, weight: float) -> None:
        g = self._g
        a, i = self._weight_cell()
        if g.kind.directed:
            g._materialize_edge_weights()
            g._eweights[a][i] = float(weight)
            g._wver += 1
        else:
            b, j = g._mirror(a, i)
            g._write_weight(a, i, b, j, float(weight))

    @property
    def label(self):
        a, i = self._weight_cell()
        el = self._g._elabels
        return None if el is None else el[a][i]

    def set_label(self, label) -> None:
        g = self._g
        a, i = self._weight_cell()
        if g.kind.directed:
            g._write_arc_label(a, i, label)
        else:
            b, j = g._mirror(a, i)
            g._write_label(a, i, b, j, label)

    def edge(self) -> Edge:
        a, i = self._weight_cell()
        e = self._g._edge_at(a, i)
        if self._side == "in":
            return Edge(e.source, e.target, True, e.weight, e.label, e.slot)
        return e


class PredecessorIterator(NeighborIterator):
    """Cursor over predecessor cells; weights/labels read via predecessor positions."""

    __slots__ = ()

    def __init__(self, g, a):
        super().__init__(g, a, side="in")

    def _row_and_degree(self):
        return self._g._pred[self._a], self._g._indeg[self._a]

    def remove(self) -> None:
        g = self._g
        j = self._current()
        b = self._a
        v = g._pred[b][j]
        a = g._idx(v)
        g._remove_arc(a, g._ppos[b][j], b, j)
        self._next = j
        self._cur = -1
        self._expected = g._mod

    def _weight_cell(self):
        g = self._g
        j = self._current()
        return g._idx(g._pred[self._a][j]), g._ppos[self._a][j]


class Multigraph(Graph):
    """Undirected graph allowing parallel edges."""

    kind = MULTIGRAPH

    def multiplicity(self, v: int, u: int) -> int:
        """Number of edges joining ``v`` and ``u``; O(d(v))."""
        a = self._idx(v)
        self._idx(u)
        n = self._adj[a][: self._deg[a]].count(u)
        if u == v and not self.kind.directed:
            n //= 2
        return n

    def edges_between(self, v: int, u: int) -> list[Edge]:
        a = self._idx(v)
        self._idx(u)
        row = self._adj[a]
        cells = [i for i in range(self._deg[a]) if row[i] == u]
        if u == v and not self.kind.directed:
            cells = [i for i in cells if i < self._pos[a][i]]
        return [self._edge_at(a, i) for i in cells]


class Pseudograph(Multigraph):
    """Undirected graph allowing parallel edges and self-loops."""

    kind = PSEUDOGRAPH

    def self_loops(self, v: int) -> int:
        self._idx(v)
        return self._loops.get(v, 0)


class Digraph(Graph):
    """Simple directed graph.

    Successor lists replace the adjacency lists; predecessor lists and
    predecessor positions (the slot of the arc in the source's successor
    list) make in-arcs reachable in O(1) per cell. Because the layout keeps
    no successor positions, relocating a successor cell scans one
    predecessor list to repair its back-pointer.
    """

    kind = DIGRAPH

    def _init_orientation(self, cap):
        self._pos = None
        self._indeg = array("i", bytes(4 * cap))
        self._pred: list[array] = []
        self._ppos: list[array] = []

    def _append_vertex_columns(self, i, cap):
        _ensure(self._indeg, i + 1)
        self._indeg[i] = 0
        self._adj.append(array("i", bytes(4 * cap)))
        self._pred.append(array("i", bytes(4 * cap)))
        self._ppos.append(array("i", bytes(4 * cap)))
        self._append_lazy_vertex_columns(i, cap)

    def _pop_vertex_columns(self):
        self._adj.pop()
        self._pred.pop()
        self._ppos.pop()
        self._pop_lazy_columns()

    def _move_vertex(self, src, dst):
        w = self._vertices[src]
        self._vertices[dst] = w
        self._deg[dst] = self._deg[src]
        self._indeg[dst] = self._indeg[src]
        self._index[w] = dst
        self._adj[dst] = self._adj[src]
        self._pred[dst] = self._pred[src]
        self._ppos[dst] = self._ppos[src]
        self._move_lazy_vertex_columns(src, dst)
        if self._bits is not None:
            self._rekey_bits(w, src, dst, self._pred[dst], self._indeg[dst])

    def _detach(self, k):
        deg = self._deg
        indeg = self._indeg
        while deg[k]:
            self._remove_at(k, deg[k] - 1)
        pred, ppos = self._pred, self._ppos
        while indeg[k]:
            j = indeg[k] - 1
            a = self._idx(pred[k][j])
            self._remove_arc(a, ppos[k][j], k, j)

    def indegree(self, v: int) -> int:
        return self._indeg[self._idx(v)]

    def outdegree(self, v: int) -> int:
        return self._deg[self._idx(v)]

    def degree(self, v: int) -> int:
        """Out-degree, matching :meth:`neighbors` which yields successors."""
        return self._deg[self._idx(v)]

    def indegrees(self) -> np.ndarray:
        return _int_view(self._indeg, self._n).copy()

    def successors(self, v: int) -> list[int]:
        return self.neighbors(v)

    def predecessors(self, v: int) -> list[int]:
        b = self._idx(v)
        return self._pred[b][: self._indeg[b]].tolist()

    def successor_iterator(self, v: int) -> NeighborIterator:
        return NeighborIterator(self, self._idx(v))

    def predecessor_iterator(self, v: int) -> PredecessorIterator:
        return PredecessorIterator(self, self._idx(v))

    # cells ---------------------------------------------------------------

    def _ensure_cells(self, a, needed):
        row = self._adj[a]
        cap = len(row)
        if needed <= cap:
            return
        extra = grown_capacity(cap, needed) - cap
        row.extend(array("i", [0]) * extra)
        if self._eweights is not None:
            self._eweights[a].extend(array("d", [DEFAULT_WEIGHT]) * extra)
        if self._elabels is not None:
            self._elabels[a].extend([None] * extra)

    def _ensure_pred_cells(self, b, needed):
        row = self._pred[b]
        cap = len(row)
        if needed > cap:
            zeros = array("i", [0]) * (grown_capacity(cap, needed) - cap)
            row.extend(zeros)
            self._ppos[b].extend(zeros)

    def _ensure_cells_for(self, columns, a, needed):
        if columns[0] is self._pred:
            self._ensure_pred_cells(a, needed)
        else:
            self._ensure_cells(a, needed)

    def _link(self, a, b, v, u):
        i = self._append_cell(a, u)
        j = self._indeg[b]
        self._ensure_pred_cells(b, j + 1)
        self._pred[b][j] = v
        self._ppos[b][j] = i
        self._indeg[b] = j + 1
        bits = self._bits
        if bits is not None and bits[a] is not None:
            self._set_bit(a, b)
        self._maybe_activate(a)
        if a == b and self._loops is not None:
            self._loops[v] = self._loops.get(v, 0) + 1
        return i, j

    def _has(self, a, b) -> bool:
        bits = self._bits
        if bits is not None:
            word = bits[a]
            if word is not None:
                return self._test_bit(word, b)
        if self._indeg[b] < self._deg[a]:
            return self._scan(self._pred[b], self._indeg[b], self._vertices[a]) >= 0
        return self._scan(self._adj[a], self._deg[a], self._vertices[b]) >= 0

    def _pred_slot(self, b, va, i) -> int:
        row = self._pred[b]
        pp = self._ppos[b]
        d = self._indeg[b]
        start = 0
        while True:
            j = row.index(va, start, d)
            if pp[j] == i:
                return j
            start = j + 1

    def _remove_at(self, a, i):
        u = self._adj[a][i]
        b = self._idx(u)
        self._remove_arc(a, i, b, self._pred_slot(b, self._vertices[a], i))

    def _remove_at_cursor(self, a, i) -> int:
        self._remove_at(a, i)
        return i

    def _remove_arc(self, a, i, b, j):
        va = self._vertices[a]
        u = self._adj[a][i]
        self._drop(a, i)
        last = self._indeg[b] - 1
        if j != last:
            self._pred[b][j] = self._pred[b][last]
            self._ppos[b][j] = self._ppos[b][last]
            self.stats.cell_moves += 1
        self._indeg[b] = last
        bits = self._bits
        if bits is not None:
            word = bits[a]
            if word is not None and not (
                self.kind.allows_multiple_edges and self._scan_quiet(self._adj[a], self._deg[a], u) >= 0
            ):
                self._clear_bit(word, b)
        if a == b and self._loops is not None:
            left = self._loops[va] - 1
            if left:
                self._loops[va] = left
            else:
                del self._loops[va]
        self._m -= 1
        self._mod += 1

    def _move_cell(self, a, s, t):
        row = self._adj[a]
        w = row[s]
        row[t] = w
        c = a if w == self._vertices[a] else self._idx(w)
        self._ppos[c][self._pred_slot(c, self._vertices[a], s)] = t
        self._move_cell_payload(a, s, t)

    def _mirror(self, a, i):
        raise AssertionError("arcs have a single weight cell")

    def _write_arc_label(self, a, i, label):
        self._materialize_edge_labels()
        self._forget_label(a, i)
        self._elabels[a][i] = label
        lm = self._elabel_map
        if lm is not None and label is not None and label not in lm:
            lm[label] = (self._vertices[a], i)

    def set_edge_weight(self, v, u, weight):
        a = self._idx(v)
        i = self._find_slot(a, v, u)
        self._materialize_edge_weights()
        self._eweights[a][i] = float(weight)
        self._wver += 1

    def set_edge_label(self, v, u, label):
        a = self._idx(v)
        i = self._find_slot(a, v, u)
        self._write_arc_label(a, i, label)

    def add_edge(self, v, u, weight=None, label=None) -> Edge:
        a = self._idx(v)
        b = self._idx(u)
        self._check_new_edge(a, b, v, u)
        i, _ = self._link(a, b, v, u)
        if weight is not None:
            self._materialize_edge_weights()
            self._eweights[a][i] = float(weight)
        if label is not None:
            self._write_arc_label(a, i, label)
        self._m += 1
        self._mod += 1
        return Edge(v, u, True, None if weight is None else float(weight), label, (v, i))

    def edges(self) -> Iterator[Edge]:
        vertices = self._vertices
        ew = self._eweights
        el = self._elabels
        for a in range(self._n):
            va = vertices[a]
            row = self._adj[a]
            for i in range(self._deg[a]):
                yield Edge(
                    va,
                    row[i],
                    True,
                    None if ew is None else ew[a][i],
                    None if el is None else el[a][i],
                    (va, i),
                )

    def _bulk_link(self, a, b, weights, labels):
        n = self._n
        ids = _int_view(self._vertices, n).astype(np.int64)
        base_out = _int_view(self._deg, n).astype(np.int64)
        base_in = _int_view(self._indeg, n).astype(np.int64)
        order_s, counts_s, starts_s, slots_s = self._group_slots(a, base_out, n)
        order_p, counts_p, starts_p, slots_p = self._group_slots(b, base_in, n)
        wcells = None
        if weights is not None:
            self._materialize_edge_weights()
            wcells = np.asarray(weights, dtype=np.float64)
        succ_cols = [self._adj] + ([self._eweights] if wcells is not None else [])
        succ_payload = [ids[b].astype(np.int32)] + ([wcells] if wcells is not None else [])
        self._write_blocks(succ_cols, counts_s, order_s, starts_s, succ_payload, base_out)
        self._write_blocks(
            [self._pred, self._ppos],
            counts_p,
            order_p,
            starts_p,
            [ids[a].astype(np.int32), slots_s.astype(np.int32)],
            base_in,
        )
        np.frombuffer(self._deg, dtype=np.int32, count=n)[:] = (base_out + counts_s).astype(np.int32)
        np.frombuffer(self._indeg, dtype=np.int32, count=n)[:] = (base_in + counts_p).astype(np.int32)
        if labels is not None:
            self._materialize_edge_labels()
            for e, label in enumerate(labels):
                if label is not None:
                    self._elabels[int(a[e])][int(slots_s[e])] = label
            self._elabel_map = None
        if self._loops is not None:
            loop_owners = a[a == b]
            for x, c in zip(*np.unique(loop_owners, return_counts=True)):
                vid = int(ids[x])
                self._loops[vid] = self._loops.get(vid, 0) + int(c)
        if self._bits is not None:
            for x, y in zip(a.tolist(), b.tolist()):
                if self._bits[x] is not None:
                    self._set_bit(x, y)

    def csr_in(self) -> CSR:
        """Snapshot of predecessor lists; weights read via predecessor positions."""
        return self._cached_csr("in")

    def _rows(self, side):
        if side == "in":
            return self._pred, self._indeg
        return self._adj, self._deg

    def _gather_weights(self, side, offsets=None):
        if side == "out":
            return super()._gather_weights(side, offsets)
        n = self._n
        indeg = self._indeg
        total = int(sum(indeg[:n]))
        if self._eweights is None or total == 0:
            return np.ones(total, dtype=np.float64)
        out = np.empty(total, dtype=np.float64)
        k = 0
        for b in range(n):
            pred = self._pred[b]
            pp = self._ppos[b]
            for j in range(indeg[b]):
                out[k] = self._eweights[self._idx(pred[j])][pp[j]]
                k += 1
        return out

    def _copy_orientation(self, g):
        g._pos = None
        g._indeg = array("i", self._indeg)
        g._pred = [array("i", r) for r in self._pred]
        g._ppos = [array("i", r) for r in self._ppos]

    def check_invariants(self) -> None:
        n = self._n
        self._check_vertex_columns()
        vertices = self._vertices
        out_total = in_total = 0
        loops: dict[int, int] = {}
        arcs_from_succ = {}
        for a in range(n):
            va = vertices[a]
            d = self._deg[a]
            assert 0 <= d <= len(self._adj[a]), f"capacity of {va}"
            out_total += d
            row = self._adj[a][:d].tolist()
            if not self.kind.allows_multiple_edges:
                assert len(set(row)) == d, f"duplicate successor at {va}"
            if not self.kind.allows_self_loops:
                assert va not in row, f"self cell at {va}"
            for i, u in enumerate(row):
                self._idx(u)
                arcs_from_succ[(va, i)] = u
                if u == va:
                    loops[va] = loops.get(va, 0) + 1
            self._check_bitset(a, row)
        seen = set()
        for b in range(n):
            vb = vertices[b]
            d = self._indeg[b]
            assert 0 <= d <= len(self._pred[b]) == len(self._ppos[b])
            in_total += d
            for j in range(d):
                v = self._pred[b][j]
                i = self._ppos[b][j]
                assert arcs_from_succ.get((v, i)) == vb, f"predecessor position broken at ({vb},{j})"
                assert (v, i) not in seen, f"two predecessor cells claim ({v},{i})"
                seen.add((v, i))
        assert out_total == in_total == self._m, f"sum outdeg {out_total}, sum indeg {in_total}, m {self._m}"
        assert len(seen) == len(arcs_from_succ)
        if self._loops is not None:
            assert loops == self._loops, f"self-loop map {self._loops} != {loops}"


class DirectedMultigraph(Digraph, Multigraph):
    kind = DIRECTED_MULTIGRAPH


class DirectedPseudograph(DirectedMultigraph, Pseudograph):
    kind = DIRECTED_PSEUDOGRAPH


GRAPH_CLASSES = {
    GRAPH: Graph,
    DIGRAPH: Digraph,
    MULTIGRAPH: Multigraph,
    DIRECTED_MULTIGRAPH: DirectedMultigraph,
    PSEUDOGRAPH: Pseudograph,
    DIRECTED_PSEUDOGRAPH: DirectedPseudograph,
}


def graph_class(kind: GraphKind | str) -> type[Graph]:
    if isinstance(kind, str):
        kind = GraphKind.from_name(kind)
    return GRAPH_CLASSES[kind]


def new_graph(kind: GraphKind | str = GRAPH, **kwargs) -> Graph:
    return graph_class(kind)(**kwargs)
