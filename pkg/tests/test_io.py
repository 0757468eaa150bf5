import random
from pathlib import Path

import pytest

from colgraph import KINDS
from colgraph import generators as gen
from colgraph.io import (
    GraphFormatError,
    append_csv,
    from_text,
    load,
    read_csv,
    save,
    structurally_equal,
    to_text,
)

import instances

GOLDEN = Path(__file__).parent / "golden"
GOLDEN_FILES = sorted(GOLDEN.glob("*.txt"))


def codes(text):
    with pytest.raises(GraphFormatError) as info:
        from_text(text)
    return [(d.line, d.code) for d in info.value.diagnostics], info.value.diagnostics


def test_parse_k3():
    g = from_text("p graph 3 3\ne 0 1\ne 1 2\ne 0 2\n")
    assert (g.num_vertices, g.num_edges) == (3, 3)
    assert g.kind is KINDS["graph"]


def test_endpoint_out_of_range():
    found, diags = codes("p graph 2 1\ne 0 5\n")
    assert found == [(2, "endpoint-out-of-range")]
    assert diags[0].column == 5
    assert diags[0].token == "5"


def test_comments_and_blank_lines():
    g = from_text("# a triangle\n\np graph 3 3 # header\ne 0 1\n  e 1 2\ne 2 0 # last\n")
    assert g.num_edges == 3


@pytest.mark.parametrize("text,expected", [
    ("e 0 1\n", [(1, "malformed-header")]),
    ("p graph x 0\n", [(1, "not-an-integer")]),
    ("p shape 1 0\n", [(1, "malformed-header")]),
    ("p graph 3\n", [(1, "malformed-header")]),
    ("p graph 2 1\ne 0 1 heavy\n", [(2, "non-numeric-weight")]),
    ("p graph 2 1\ne 0 0\n", [(2, "self-loop")]),
    ("p graph 2 2\ne 0 1\ne 1 0\n", [(3, "duplicate-edge")]),
    ("p digraph 2 2\ne 0 1\ne 0 1\n", [(3, "duplicate-edge")]),
    ("p graph 2 2\ne 0 1\n", [(1, "count-mismatch")]),
    ("p graph 2 0\nv 0\nv 0\n", [(3, "duplicate-vertex"), (1, "count-mismatch")]),
    ("p graph 2 1\nv 3\ne 3 5\n", [(1, "count-mismatch"), (3, "endpoint-out-of-range")]),
    ("p graph 2 0\nq 1\n", [(2, "syntax")]),
    ("p graph 2 1\ne -1 0\n", [(2, "out-of-range")]),
])
def test_diagnostics(text, expected):
    found, _ = codes(text)
    assert found == expected


def test_all_problems_reported_together():
    found, _ = codes("p graph 3 3\ne 0 9\ne 1 x\ne 2 2\n")
    assert [c for _, c in found] == ["not-an-integer", "endpoint-out-of-range", "self-loop"]


def test_multigraph_accepts_parallel_and_pseudograph_loops():
    assert from_text("p multigraph 2 2\ne 0 1\ne 1 0\n").multiplicity(0, 1) == 2
    assert from_text("p pseudograph 1 2\ne 0 0\ne 0 0\n").self_loops(0) == 2


def test_labels_survive_special_characters():
    g = gen.path(3)
    g.set_vertex_label(0, "Iași # @home")
    g.set_edge_label(1, 2, "two words")
    h = from_text(to_text(g))
    assert h.get_vertex_label(0) == "Iași # @home"
    assert h.get_edge_label(2, 1) == "two words"


def test_weights_round_trip_exactly():
    g = gen.path(2)
    g.set_edge_weight(0, 1, 0.1 + 0.2)
    assert from_text(to_text(g)).get_edge_weight(0, 1) == 0.1 + 0.2


def test_file_round_trip(tmp_path):
    g = gen.random_digraph_gnp(15, 0.3, seed=4, weights=(0.0, 1.0))
    p = tmp_path / "g.txt"
    save(g, p)
    assert structurally_equal(load(p), g)


@pytest.mark.parametrize("kind", sorted(KINDS))
def test_round_trip_random(kind):
    r = random.Random(sorted(KINDS).index(kind))
    for _ in range(40):
        g = instances.rich_graph(r, kind)
        text = to_text(g)
        h = from_text(text)
        assert structurally_equal(g, h)
        assert to_text(h) == text


@pytest.mark.parametrize("path", GOLDEN_FILES, ids=lambda p: p.name)
def test_golden_byte_determinism(path):
    raw = path.read_bytes()
    assert to_text(load(path)).encode("utf-8") == raw


def test_golden_generated_files_match_generators():
    cases = {
        "gen_gnm_12_20_s7_w.txt": gen.gnm(12, 20, seed=7, weights=(0.0, 10.0)),
        "gen_digraph_gnp_10_03_s3.txt": gen.random_digraph_gnp(10, 0.3, seed=3),
        "gen_tournament_6_s1.txt": gen.random_tournament(6, seed=1),
        "gen_tree_15_s2.txt": gen.random_tree(15, seed=2),
    }
    for name, g in cases.items():
        assert to_text(g) == (GOLDEN / name).read_text(encoding="utf-8"), name


def test_csv_append(tmp_path):
    p = tmp_path / "r.csv"
    append_csv(p, ["a", "b"], [[1, 2]])
    append_csv(p, ["a", "b"], [[3, "x;y"]])
    assert read_csv(p) == [{"a": "1", "b": "2"}, {"a": "3", "b": "x;y"}]
