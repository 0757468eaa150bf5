"""Primitive-backed vertex and edge collections, and graph-concept wrappers.

Vertex collections store ids in ``array('i')`` buffers; membership in
:class:`VertexSet` is a byte per vertex id, so ``contains`` never hashes.
The concept types (:class:`Path`, :class:`Cycle`, :class:`StableSet`,
:class:`Clique`, :class:`Matching`, :class:`Circuit`) each offer
``is_valid(g)``, a pure check that returns False (never raises) when the
object does not describe that concept in ``g``.
"""

from __future__ import annotations

from array import array
from collections import Counter
from itertools import combinations
from typing import Iterable, Iterator

from .core.graph import grown_capacity


def _grow(buf: array, needed: int, fill=0):
    cap = len(buf)
    if needed > cap:
        buf.extend(array(buf.typecode, [fill]) * (grown_capacity(cap, needed) - cap))


class VertexList:
    """Ordered vertex sequence with O(1) positional access; keeps duplicates."""

    __slots__ = ("_data", "_size")

    def __init__(self, items: Iterable[int] = (), capacity: int = 0):
        self._data = array("i", bytes(4 * capacity))
        self._size = 0
        for v in items:
            self.add(v)

    def add(self, v: int) -> None:
        _grow(self._data, self._size + 1)
        self._data[self._size] = v
        self._size += 1

    append = add

    def extend(self, items: Iterable[int]) -> None:
        for v in items:
            self.add(v)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return self.to_list()[i]
        if i < 0:
            i += self._size
        if not 0 <= i < self._size:
            raise IndexError(i)
        return self._data[i]

    def __setitem__(self, i: int, v: int):
        if i < 0:
            i += self._size
        if not 0 <= i < self._size:
            raise IndexError(i)
        self._data[i] = v

    def pop(self):
        """Remove and return the last element, or None when empty."""
        if not self._size:
            return None
        self._size -= 1
        return self._data[self._size]

    def remove_at(self, i: int) -> int:
        """Remove position ``i`` keeping the order of the others; O(size)."""
        v = self[i]
        if i < 0:
            i += self._size
        self._data[i : self._size - 1] = self._data[i + 1 : self._size]
        self._size -= 1
        return v

    def remove(self, v: int) -> bool:
        """Remove the first occurrence of ``v``; False if absent."""
        try:
            i = self._data.index(v, 0, self._size)
        except ValueError:
            return False
        self.remove_at(i)
        return True

    def index(self, v: int) -> int:
        return self._data.index(v, 0, self._size)

    def __contains__(self, v):
        try:
            self._data.index(v, 0, self._size)
        except (ValueError, TypeError):
            return False
        return True

    def __len__(self):
        return self._size

    def __iter__(self) -> Iterator[int]:
        return iter(self._data[: self._size])

    def __reversed__(self):
        return reversed(self._data[: self._size])

    def __eq__(self, other):
        if isinstance(other, VertexList):
            return self.to_list() == other.to_list()
        if isinstance(other, list):
            return self.to_list() == other
        return NotImplemented

    def clear(self):
        self._size = 0

    def is_empty(self) -> bool:
        return self._size == 0

    def to_list(self) -> list[int]:
        return self._data[: self._size].tolist()

    def to_array(self) -> array:
        return self._data[: self._size]

    def __repr__(self):
        return f"{type(self).__name__}({self.to_list()})"


class VertexSet:
    """Set of vertex ids with O(1) add/remove/contains.

    Membership is a byte array indexed by vertex id and a parallel array of
    positions into the element buffer, so removal is a swap with the last
    element. Pass a graph to size the arrays for its largest id up front.
    """

    __slots__ = ("_data", "_size", "_where", "_member", "probes")

    def __init__(self, items: Iterable[int] = (), graph=None):
        span = graph.next_vertex_id if graph is not None else 0
        self._data = array("i", bytes(4 * (graph.num_vertices if graph is not None else 0)))
        self._size = 0
        self._member = bytearray(span)
        self._where = array("i", bytes(4 * span))
        self.probes = 0
        for v in items:
            self.add(v)

    def _reserve(self, v):
        if v >= len(self._member):
            new = grown_capacity(len(self._member), v + 1)
            self._member.extend(bytes(new - len(self._member)))
            _grow(self._where, new)

    def contains(self, v: int) -> bool:
        self.probes += 1
        return 0 <= v < len(self._member) and self._member[v] == 1

    __contains__ = contains

    def add(self, v: int) -> bool:
        """Insert ``v``; returns False when it was already present."""
        if v < 0:
            raise ValueError(f"vertex ids are non-negative, got {v}")
        self._reserve(v)
        if self._member[v]:
            return False
        self._member[v] = 1
        _grow(self._data, self._size + 1)
        self._data[self._size] = v
        self._where[v] = self._size
        self._size += 1
        return True

    def remove(self, v: int) -> bool:
        if not (0 <= v < len(self._member) and self._member[v]):
            return False
        i = self._where[v]
        last = self._size - 1
        w = self._data[last]
        self._data[i] = w
        self._where[w] = i
        self._member[v] = 0
        self._size = last
        return True

    discard = remove

    def pop(self):
        """Remove and return the most recently placed element, or None."""
        if not self._size:
            return None
        v = self._data[self._size - 1]
        self.remove(v)
        return v

    def update(self, items: Iterable[int]) -> None:
        for v in items:
            self.add(v)

    def __len__(self):
        return self._size

    def __iter__(self) -> Iterator[int]:
        return iter(self._data[: self._size])

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return self.to_set() == other.to_set()
        if isinstance(other, (set, frozenset)):
            return self.to_set() == other
        return NotImplemented

    def is_empty(self) -> bool:
        return self._size == 0

    def clear(self):
        for v in self._data[: self._size]:
            self._member[v] = 0
        self._size = 0

    def to_set(self) -> set[int]:
        return set(self._data[: self._size])

    def to_list(self) -> list[int]:
        return self._data[: self._size].tolist()

    def __repr__(self):
        return f"{type(self).__name__}({sorted(self.to_set())})"


class VertexQueue:
    """FIFO queue of vertex ids on a growable ring buffer."""

    __slots__ = ("_buf", "_head", "_size")

    def __init__(self, items: Iterable[int] = (), capacity: int = 8):
        self._buf = array("i", bytes(4 * max(capacity, 1)))
        self._head = 0
        self._size = 0
        for v in items:
            self.offer(v)

    def offer(self, v: int) -> None:
        buf = self._buf
        cap = len(buf)
        if self._size == cap:
            h = self._head
            ordered = buf[h:] + buf[:h]
            ordered.extend(array("i", [0]) * (grown_capacity(cap, cap + 1) - cap))
            self._buf = buf = ordered
            self._head = 0
            cap = len(buf)
        buf[(self._head + self._size) % cap] = v
        self._size += 1

    push = offer

    def poll(self):
        """Remove and return the oldest element, or None when empty."""
        if not self._size:
            return None
        v = self._buf[self._head]
        self._head = (self._head + 1) % len(self._buf)
        self._size -= 1
        return v

    def peek(self):
        return self._buf[self._head] if self._size else None

    def __len__(self):
        return self._size

    def is_empty(self) -> bool:
        return self._size == 0

    def clear(self):
        self._head = 0
        self._size = 0

    def __iter__(self):
        cap = len(self._buf)
        for k in range(self._size):
            yield self._buf[(self._head + k) % cap]

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self):
        return f"{type(self).__name__}({self.to_list()})"


class VertexStack:
    """LIFO stack of vertex ids."""

    __slots__ = ("_data", "_size")

    def __init__(self, items: Iterable[int] = (), capacity: int = 8):
        self._data = array("i", bytes(4 * max(capacity, 1)))
        self._size = 0
        for v in items:
            self.push(v)

    def push(self, v: int) -> None:
        _grow(self._data, self._size + 1)
        self._data[self._size] = v
        self._size += 1

    def pop(self):
        """Remove and return the top element, or None when empty."""
        if not self._size:
            return None
        self._size -= 1
        return self._data[self._size]

    def peek(self):
        return self._data[self._size - 1] if self._size else None

    def __len__(self):
        return self._size

    def is_empty(self) -> bool:
        return self._size == 0

    def clear(self):
        self._size = 0

    def __iter__(self):
        """Bottom to top."""
        return iter(self._data[: self._size])

    def to_list(self) -> list[int]:
        return self._data[: self._size].tolist()

    def __repr__(self):
        return f"{type(self).__name__}({self.to_list()})"


class EdgeSet:
    """Set of endpoint pairs stored in two packed int arrays.

    Undirected pairs are canonicalized to ``(min, max)``; membership uses a
    hash of the canonical pair mapped to its packed position.
    """

    __slots__ = ("directed", "_src", "_dst", "_where", "weights")

    def __init__(self, pairs: Iterable = (), directed: bool = False):
        self.directed = directed
        self._src = array("i")
        self._dst = array("i")
        self._where: dict[tuple[int, int], int] = {}
        for p in pairs:
            self.add(*_pair(p))

    def _key(self, v, u):
        if self.directed or v <= u:
            return (v, u)
        return (u, v)

    def add(self, v: int, u: int | None = None) -> bool:
        if u is None:
            v, u = _pair(v)
        key = self._key(v, u)
        if key in self._where:
            return False
        self._where[key] = len(self._src)
        self._src.append(key[0])
        self._dst.append(key[1])
        return True

    def remove(self, v: int, u: int | None = None) -> bool:
        if u is None:
            v, u = _pair(v)
        key = self._key(v, u)
        i = self._where.pop(key, None)
        if i is None:
            return False
        last = len(self._src) - 1
        if i != last:
            moved = (self._src[last], self._dst[last])
            self._src[i], self._dst[i] = moved
            self._where[moved] = i
        self._src.pop()
        self._dst.pop()
        return True

    def contains(self, v: int, u: int | None = None) -> bool:
        if u is None:
            v, u = _pair(v)
        return self._key(v, u) in self._where

    def __contains__(self, pair):
        try:
            return self.contains(*_pair(pair))
        except (TypeError, ValueError):
            return False

    def __len__(self):
        return len(self._src)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return zip(self._src.tolist(), self._dst.tolist())

    def __eq__(self, other):
        if isinstance(other, EdgeSet):
            return self.directed == other.directed and set(self) == set(other)
        return NotImplemented

    def to_set(self) -> set[tuple[int, int]]:
        return set(self)

    def vertices(self) -> set[int]:
        return set(self._src) | set(self._dst)

    def is_valid(self, g) -> bool:
        """Every pair is an edge of ``g``."""
        return all(_has_edge(g, v, u) for v, u in self)

    def __repr__(self):
        return f"{type(self).__name__}({sorted(self)})"


def _pair(p):
    if hasattr(p, "source") and hasattr(p, "target"):
        return p.source, p.target
    v, u = p
    return v, u


def _has_edge(g, v, u) -> bool:
    return g.contains_vertex(v) and g.contains_vertex(u) and g.contains_edge(v, u)


def _count_between(g, v, u) -> int:
    if not (g.contains_vertex(v) and g.contains_vertex(u)):
        return 0
    if g.kind.allows_multiple_edges:
        return g.multiplicity(v, u)
    return int(g.contains_edge(v, u))


class Path(VertexList):
    """Vertex sequence ``v0, v1, ..., vk``; valid when consecutive vertices are
    adjacent (arcs followed forward in digraphs) and no vertex repeats."""

    __slots__ = ("weight",)

    def __init__(self, items: Iterable[int] = (), weight: float | None = None):
        super().__init__(items)
        self.weight = weight

    @property
    def length(self) -> int:
        """Number of edges."""
        return max(len(self) - 1, 0)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.to_list()
        return list(zip(vs, vs[1:]))

    def is_valid(self, g) -> bool:
        vs = self.to_list()
        if not all(g.contains_vertex(v) for v in vs):
            return False
        if len(set(vs)) != len(vs):
            return False
        return all(_has_edge(g, v, u) for v, u in zip(vs, vs[1:]))


class Cycle(VertexList):
    """Closed path ``v0, ..., vk`` with the closing edge ``vk v0`` implied.

    A single vertex is a self-loop; two vertices need two parallel edges
    (or both arcs in a digraph).
    """

    __slots__ = ("weight",)

    def __init__(self, items: Iterable[int] = (), weight: float | None = None):
        super().__init__(items)
        self.weight = weight

    @property
    def length(self) -> int:
        return len(self)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.to_list()
        if not vs:
            return []
        return list(zip(vs, vs[1:] + vs[:1]))

    def is_valid(self, g) -> bool:
        vs = self.to_list()
        k = len(vs)
        if k == 0 or not all(g.contains_vertex(v) for v in vs):
            return False
        if len(set(vs)) != k:
            return False
        if k == 1:
            return g.contains_edge(vs[0], vs[0])
        if k == 2 and not g.kind.directed:
            return _count_between(g, vs[0], vs[1]) >= 2
        return all(_has_edge(g, v, u) for v, u in self.edges())


class Circuit(VertexList):
    """Closed walk ``v0, v1, ..., vk = v0`` that may revisit vertices.

    Valid when every step is an edge of ``g`` and no edge is used more
    often than its multiplicity.
    """

    __slots__ = ()

    def edges(self) -> list[tuple[int, int]]:
        vs = self.to_list()
        return list(zip(vs, vs[1:]))

    def is_valid(self, g) -> bool:
        vs = self.to_list()
        if not vs or vs[0] != vs[-1]:
            return False
        if not all(g.contains_vertex(v) for v in vs):
            return False
        used = Counter()
        for v, u in self.edges():
            key = (v, u) if g.kind.directed or v <= u else (u, v)
            used[key] += 1
        return all(_count_between(g, v, u) >= c for (v, u), c in used.items())

    def uses_every_edge(self, g) -> bool:
        """True when the walk traverses each edge of ``g`` exactly once."""
        if not self.is_valid(g):
            return False
        return len(self) - 1 == g.num_edges


class StableSet(VertexSet):
    """Vertex subset with no two members adjacent."""

    __slots__ = ()

    def is_valid(self, g) -> bool:
        vs = self.to_list()
        if not all(g.contains_vertex(v) for v in vs):
            return False
        if any(g.contains_edge(v, v) for v in vs):
            return False
        return not any(
            g.contains_edge(v, u) or (g.kind.directed and g.contains_edge(u, v)) for v, u in combinations(vs, 2)
        )


class Clique(VertexSet):
    """Vertex subset whose members are pairwise adjacent."""

    __slots__ = ()

    def is_valid(self, g) -> bool:
        vs = self.to_list()
        if not all(g.contains_vertex(v) for v in vs):
            return False
        return all(g.contains_edge(v, u) or g.contains_edge(u, v) for v, u in combinations(vs, 2))

    def is_maximal(self, g) -> bool:
        if not self.is_valid(g):
            return False
        members = self.to_list()
        for w in g.vertices():
            if w in self:
                continue
            if all(g.contains_edge(w, v) or g.contains_edge(v, w) for v in members):
                return False
        return True


class Matching(EdgeSet):
    """Set of vertex-disjoint edges with an O(1) mate lookup."""

    __slots__ = ("_mate", "_conflict")

    def __init__(self, pairs: Iterable = (), directed: bool = False):
        self._mate: dict[int, int] = {}
        self._conflict = 0
        super().__init__(pairs, directed)

    def add(self, v: int, u: int | None = None) -> bool:
        if u is None:
            v, u = _pair(v)
        if not super().add(v, u):
            return False
        for a, b in ((v, u), (u, v)):
            if a in self._mate:
                self._conflict += 1
            self._mate.setdefault(a, b)
        return True

    def remove(self, v: int, u: int | None = None) -> bool:
        if u is None:
            v, u = _pair(v)
        if not super().remove(v, u):
            return False
        self._rebuild_mates()
        return True

    def _rebuild_mates(self):
        self._mate = {}
        self._conflict = 0
        for a, b in self:
            for x, y in ((a, b), (b, a)):
                if x in self._mate:
                    self._conflict += 1
                self._mate.setdefault(x, y)

    def mate(self, v: int):
        """Partner of ``v`` or None when unmatched."""
        return self._mate.get(v)

    def is_matched(self, v: int) -> bool:
        return v in self._mate

    @property
    def size(self) -> int:
        return len(self)

    def is_valid(self, g) -> bool:
        if self._conflict:
            return False
        seen = set()
        for v, u in self:
            if v == u or v in seen or u in seen:
                return False
            seen.add(v)
            seen.add(u)
            if not _has_edge(g, v, u):
                return False
        return True
