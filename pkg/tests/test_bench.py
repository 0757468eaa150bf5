import itertools
import math

import pytest

from colgraph import generators as gen
from colgraph.bench import cli
from colgraph.bench import experiments as ex
from colgraph.bench.harness import BenchParams, BenchReport, ChecksumMismatch, ParameterError, measure, scaling_exponent
from colgraph.io import load, read_csv, save


def small(n, **kw):
    kw.setdefault("reps", 2)
    kw.setdefault("warmups", 1)
    return BenchParams(n=n, seed=kw.pop("seed", 11), **kw)


def test_create_complete_checksum_and_memory():
    r = ex.run_experiment("create-complete", small(5000, reps=1, warmups=0))
    n, m = 5000, 12_497_500
    assert r.checksum == m
    assert r.modeled_memory_bytes == 16 * n + 17 * m
    assert r.extra["memory_without_bitset_bytes"] == 16 * n + 16 * m


def test_dfs_checksum_kernel_engine():
    r = ex.run_experiment("dfs", small(1000, reps=1, warmups=1, engine="kernel"))
    assert r.checksum == 1000 * 1000


@pytest.mark.parametrize("name", ["dfs", "bfs"])
def test_traversal_engines_agree(name):
    a = ex.run_experiment(name, small(120, reps=1))
    b = ex.run_experiment(name, small(120, reps=1, engine="kernel"))
    assert a.checksum == b.checksum == 120 * 120


def test_hopcroft_karp_large_instance():
    r = ex.run_experiment("hopcroft-karp", BenchParams(n=10_000, seed=5, reps=1, warmups=0))
    assert r.checksum <= 5000
    # at this density every vertex has many neighbors across, so the matching is perfect
    assert r.checksum == 5000
    assert r.median_ms > 0


def test_hopcroft_karp_cross_backend():
    ours, ref, _ = ex.compare_backends("hopcroft-karp", small(2000, reps=1, warmups=0))
    assert ours.checksum == ref.checksum


NAIVE_SIZES = {
    "create-empty": 500,
    "create-complete": 200,
    "create-regular": 300,
    "remove-edges": 150,
    "remove-vertices": 120,
    "iterate-tournament": 60,
    "dfs": 80,
    "bfs": 80,
    "dijkstra-sparse": 120,
    "dijkstra-dense": 60,
    "prim": 150,
    "kruskal": 150,
    "hopcroft-karp": 300,
}


def test_every_naive_experiment_is_listed():
    assert set(NAIVE_SIZES) == {k for k, e in ex.EXPERIMENTS.items() if e.naive_ok}


@pytest.mark.parametrize("name", sorted(NAIVE_SIZES))
def test_compare_backends_equal_checksums(name):
    ours, ref, ratio = ex.compare_backends(name, small(NAIVE_SIZES[name]))
    assert ours.checksum == ref.checksum
    assert ref.backend == "naive"
    assert ratio > 0
    assert ours.extra["speedup_vs_naive"] == round(ratio, 3)


def test_remove_edges_ends_empty():
    ours, ref, _ = ex.compare_backends("remove-edges", small(100))
    assert ours.checksum == ref.checksum


@pytest.mark.parametrize("name", ["labeled-weighted-memory", "edmonds-karp"])
def test_naive_unsupported(name):
    with pytest.raises(ParameterError):
        ex.compare_backends(name, small(50))


def test_unknown_experiment():
    with pytest.raises(ParameterError):
        ex.get_experiment("quicksort")


@pytest.mark.parametrize("params", [
    BenchParams(n=0),
    BenchParams(n=10, p=1.5),
    BenchParams(n=10, k=-1),
    BenchParams(n=10, m=-3),
    BenchParams(n=10, engine="gpu"),
])
def test_invalid_params(params):
    with pytest.raises(ParameterError):
        measure(ex.get_experiment("bfs"), params)


def test_reps_must_be_positive():
    with pytest.raises(ParameterError):
        measure(ex.get_experiment("create-empty"), BenchParams(n=5, reps=0))


def test_determinism_across_runs():
    for name in ["dijkstra-sparse", "prim", "edmonds-karp", "labeled-weighted-memory"]:
        a = ex.run_experiment(name, small(80))
        b = ex.run_experiment(name, small(80))
        assert a.checksum == b.checksum, name


def test_defaults_resolved():
    r = ex.run_experiment("dijkstra-sparse", small(200, reps=1))
    assert r.params.m == 25 * 200
    assert "selected" in r.extra


class Flaky(ex.Experiment):
    name = "flaky"

    def __init__(self):
        self.calls = itertools.count()

    def run(self, ctx, params, backend):
        return next(self.calls)


def test_checksum_mismatch_between_reps():
    with pytest.raises(ChecksumMismatch):
        measure(Flaky(), BenchParams(n=3, reps=3, warmups=0))


def test_cli_exit_code_checksum(monkeypatch, capsys):
    monkeypatch.setitem(ex.EXPERIMENTS, "create-empty", Flaky())
    assert cli.main(["bench", "create-empty", "--n", "3", "--seed", "1", "--warmups", "0"]) == 3
    assert "checksum mismatch" in capsys.readouterr().err


def test_cli_success_and_csv(tmp_path, capsys):
    out = tmp_path / "r.csv"
    argv = ["bench", "create-complete", "--n", "300", "--seed", "2", "--reps", "5", "--out", str(out)]
    assert cli.main(argv) == 0
    assert cli.main(argv) == 0
    text = capsys.readouterr().out
    assert "checksum 44850" in text
    assert "modeled memory" in text
    rows = read_csv(out)
    assert len(rows) == 2
    assert list(rows[0]) == BenchReport.CSV_HEADER
    assert rows[0]["checksum"] == "44850"
    assert len(rows[0]["times_ms"].split(";")) == 5
    assert float(rows[0]["median_ms"]) > 0


def test_cli_compare_naive(tmp_path, capsys):
    out = tmp_path / "r.csv"
    argv = ["bench", "bfs", "--n", "60", "--seed", "2", "--reps", "2", "--compare-naive", "--out", str(out)]
    assert cli.main(argv) == 0
    assert "checksums equal" in capsys.readouterr().out
    assert [r["backend"] for r in read_csv(out)] == ["colgraph", "naive"]


def test_cli_rss_column(tmp_path):
    out = tmp_path / "r.csv"
    assert cli.main(["bench", "create-empty", "--n", "100", "--seed", "1", "--rss", "--out", str(out)]) == 0
    assert int(read_csv(out)[0]["rss_bytes"]) > 0


@pytest.mark.parametrize("argv", [
    ["bench", "nope", "--n", "5", "--seed", "1"],
    ["bench", "bfs", "--n", "5"],
    ["bench", "bfs", "--n", "5", "--seed", "1", "--p", "2.0"],
    ["bench", "bfs", "--n", "-1", "--seed", "1"],
    ["bench", "bfs", "--n", "5", "--seed", "1", "--warmups", "-1"],
    ["bench", "prim", "--n", "ten", "--seed", "1"],
    ["bench", "edmonds-karp", "--n", "10", "--seed", "1", "--compare-naive"],
    ["bench", "create-regular", "--n", "4", "--k", "2", "--seed", "1"],
    ["generate", "gnm", "--n", "5", "--seed", "1", "--out", "x.txt"],
    ["generate", "gnm", "--n", "5", "--m", "99", "--seed", "1", "--out", "x.txt"],
    ["generate", "complete", "--n", "5", "--p", "0.1", "--seed", "1", "--out", "x.txt"],
    ["frobnicate"],
])
def test_cli_parameter_errors(argv, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    assert capsys.readouterr().err


def test_cli_generate_and_estimate(tmp_path, capsys):
    path = tmp_path / "g.txt"
    assert cli.main(["generate", "gnm", "--n", "40", "--m", "90", "--seed", "3", "--out", str(path)]) == 0
    g = load(path)
    assert (g.num_vertices, g.num_edges) == (40, 90)
    capsys.readouterr()
    assert cli.main(["estimate", "--in", str(path)]) == 0
    out = capsys.readouterr().out
    assert f"{16 * 40 + 16 * 90:,d}" in out


def test_cli_generate_weighted(tmp_path):
    path = tmp_path / "w.txt"
    assert cli.main(["generate", "digraph-gnp", "--n", "20", "--p", "0.3", "--seed", "1",
                     "--weights", "1", "2", "--out", str(path)]) == 0
    g = load(path)
    assert g.kind.directed
    assert all(1.0 <= e.weight <= 2.0 for e in g.edges())


def test_cli_estimate_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("p graph 2 1\ne 0 7\n")
    assert cli.main(["estimate", "--in", str(bad)]) == 2
    assert "line 2, column 5: endpoint out of range" in capsys.readouterr().err
    assert cli.main(["estimate", "--in", str(tmp_path / "missing.txt")]) == 2


def test_estimate_weighted_digraph(tmp_path, capsys):
    d = gen.random_digraph_gnm(30, 70, seed=1, weights=(0.0, 1.0))
    path = tmp_path / "d.txt"
    save(d, path)
    assert cli.main(["estimate", "--in", str(path)]) == 0
    assert f"{28 * 30 + 20 * 70:,d}" in capsys.readouterr().out


def test_scaling_exponent():
    sizes = [10, 20, 40, 80]
    assert scaling_exponent(sizes, [s**2 for s in sizes]) == pytest.approx(2.0)
    assert scaling_exponent(sizes, [3 * s * math.log(s) for s in sizes]) == pytest.approx(1.0 + 1 / math.log(28.3), abs=0.1)


def test_warmup_scale():
    p = BenchParams(n=1000, m=5000).scaled(0.1)
    assert (p.n, p.m) == (100, 500)
