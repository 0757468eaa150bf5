from hypothesis import given
from hypothesis import strategies as st

from colgraph import generators as gen
from colgraph.collections import (
    Circuit,
    Clique,
    Cycle,
    EdgeSet,
    Matching,
    Path,
    StableSet,
    VertexList,
    VertexQueue,
    VertexSet,
    VertexStack,
)


def test_path_and_stable_set_in_k3():
    k3 = gen.complete(3)
    assert Path([0, 1, 2]).is_valid(k3)
    assert not StableSet([0, 1]).is_valid(k3)
    assert StableSet([0]).is_valid(k3)


def test_matching_validity_in_c4():
    c4 = gen.cycle(4)
    assert Matching([(0, 1), (2, 3)]).is_valid(c4)
    assert not Matching([(0, 1), (1, 2)]).is_valid(c4)
    assert not Matching([(0, 2)]).is_valid(c4)


def test_unknown_vertex_is_invalid_not_an_error():
    k3 = gen.complete(3)
    assert not Path([0, 9]).is_valid(k3)
    assert not Clique([0, 9]).is_valid(k3)
    assert not Matching([(0, 9)]).is_valid(k3)


def test_cycle_and_clique():
    k4 = gen.complete(4)
    assert Cycle([0, 1, 2]).is_valid(k4)
    assert Cycle([0, 1, 2]).length == 3
    assert not Cycle([0, 1, 0]).is_valid(k4)
    assert not Cycle([0, 1, 2]).is_valid(gen.path(3))
    assert Clique([0, 1, 2]).is_valid(k4)
    assert not Clique([0, 1, 2]).is_maximal(k4)
    assert Clique([0, 1, 2, 3]).is_maximal(k4)


def test_circuit_uses_every_edge():
    c4 = gen.cycle(4)
    walk = Circuit([0, 1, 2, 3, 0])
    assert walk.is_valid(c4)
    assert walk.uses_every_edge(c4)
    assert not Circuit([0, 1, 0]).uses_every_edge(c4)


def test_vertex_set_add_twice():
    s = VertexSet()
    assert s.add(3)
    assert not s.add(3)
    assert len(s) == 1
    assert s.remove(3) and s.is_empty()


def test_queue_and_stack():
    q = VertexQueue()
    q.offer(1)
    q.offer(2)
    assert q.poll() == 1
    assert q.poll() == 2
    assert q.poll() is None
    st_ = VertexStack([1, 2])
    assert st_.pop() == 2
    assert st_.pop() == 1
    assert st_.pop() is None


def test_edge_set_canonical_undirected():
    e = EdgeSet()
    e.add((0, 2))
    assert e.contains((2, 0))
    assert (2, 0) in e
    d = EdgeSet(directed=True)
    d.add(0, 2)
    assert not d.contains(2, 0)


def test_matching_mates():
    m = Matching([(0, 1), (2, 3)])
    assert m.size == 2
    assert m.mate(0) == 1 and m.mate(3) == 2
    assert not m.is_matched(4)
    m.remove(1, 0)
    assert m.mate(0) is None


def test_path_weight_and_edges():
    p = Path([0, 1, 2], weight=3.5)
    assert p.weight == 3.5
    assert p.edges() == [(0, 1), (1, 2)]
    assert p.length == 2


@given(st.lists(st.integers(0, 200)))
def test_vertex_set_matches_python_set(items):
    s = VertexSet()
    for x in items:
        s.add(x)
    assert s.to_set() == set(items)
    for x in items[::2]:
        s.remove(x)
    assert s.to_set() == set(items) - set(items[::2])


@given(st.lists(st.integers(0, 1000)))
def test_queue_is_fifo(items):
    q = VertexQueue()
    for x in items:
        q.offer(x)
    out = []
    while not q.is_empty():
        out.append(q.poll())
    assert out == items


@given(st.lists(st.integers(0, 1000), min_size=1), st.data())
def test_vertex_list_remove_at_preserves_order(items, data):
    vl = VertexList(items)
    i = data.draw(st.integers(0, len(items) - 1))
    assert vl.remove_at(i) == items[i]
    assert vl.to_list() == items[:i] + items[i + 1 :]
