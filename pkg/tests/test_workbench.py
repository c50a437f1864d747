import csv
import json
from fractions import Fraction

import pytest

from clustervd import cli
from clustervd.approx import cluster_vd_apx
from clustervd.graph import is_cluster_graph
from clustervd.oracle import OracleBudget, exact_cluster_vd
from clustervd.workbench.bench import BenchReport, BenchRow, run_bench, write_report
from clustervd.workbench.generators import MODELS, generate, parse_model_spec, planted_clusters, vc_pendant
from clustervd.workbench.instance_io import ParseError, parse_instance, serialize_instance, write_instance
from clustervd.workbench.solution import load_solution_vertices, solution_to_dict

from conftest import complete_graph, path_graph, weighted

P3_TEXT = """\
# a path
p cvd 3 2
v 1 5
v 2 1
v 3 5/2
e 1 2
e 2 3
"""


# -- instance format ----------------------------------------------------------


def test_parse_example():
    wg = parse_instance(P3_TEXT)
    assert wg.graph.vertices == (1, 2, 3)
    assert wg.graph.edges() == [(1, 2), (2, 3)]
    assert wg.cost == {1: 5, 2: 1, 3: Fraction(5, 2)}


def test_parse_decimal_weight():
    assert parse_instance("p cvd 1 0\nv 1 2.5\n").cost[1] == Fraction(5, 2)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("p cvd 3 0\nv 1 1\nv 2 1\n", "vertex 3 has no weight"),
        ("p cvd 1 0\nv 1 -2\n", "negative weight"),
        ("p cvd 2 2\nv 1 1\nv 2 1\ne 1 2\ne 2 1\n", "duplicate edge"),
        ("p cvd 1 1\nv 1 1\ne 1 1\n", "self-loop"),
        ("p cvd 2 2\nv 1 1\nv 2 1\ne 1 2\n", "declares 2 edges"),
        ("p cvd 1 0\nx 1\n", "unknown record"),
        ("v 1 1\n", "before the"),
        ("", "missing"),
        ("p cvd 2 1\nv 1 1\nv 2 1\ne 1 3\n", "outside 1..2"),
        ("p cvd 1 0\nv 1 abc\n", "bad weight"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_instance(text)


def test_parse_error_line_number():
    with pytest.raises(ParseError) as info:
        parse_instance("p cvd 1 0\n\nv 1 -1\n")
    assert info.value.line == 3


def test_round_trip(rng):
    for model in ("gnp", "planted-clusters"):
        for seed in range(20):
            params = {"n": 9, "p": 0.4} if model == "gnp" else {"n": 9, "k": 3, "noise": 0.2}
            wg = generate(model, {**params, "max_weight": 7}, seed)
            assert parse_instance(serialize_instance(wg, "x\ny")) == wg
    half = weighted(path_graph(2), [Fraction(1, 2), Fraction(7, 3)])
    assert parse_instance(serialize_instance(half)) == half


def test_serialize_needs_dense_ids():
    with pytest.raises(ValueError):
        serialize_instance(weighted(complete_graph(2, start=0)))


# -- generators ---------------------------------------------------------------


def test_vc_pendant_shape():
    wg = vc_pendant(generate("complete", {"n": 3}))
    assert (wg.graph.n, wg.graph.m) == (6, 6)
    assert exact_cluster_vd(wg)[1] == 2


def test_planted_without_noise_is_clustered():
    wg = planted_clusters(9, 3, 0.0, seed=1)
    assert is_cluster_graph(wg.graph)
    assert [len(c) for c in wg.graph.components()] == [3, 3, 3]
    assert exact_cluster_vd(wg)[1] == 0


def test_generators_deterministic():
    for model, params in [
        ("gnp", {"n": 8, "p": 0.5}),
        ("planted-clusters", {"n": 8, "k": 2, "noise": 0.3}),
        ("vc-pendant", {"inner": "gnp", "n": 4, "p": 0.5}),
        ("bull-neighborhood", {}),
        ("k5-gadget", {"pendants": 5}),
        ("complete", {"n": 4}),
        ("cycle", {"n": 5}),
        ("path", {"n": 5}),
    ]:
        assert model in MODELS
        a = generate(model, {**params, "max_weight": 9}, 11)
        assert a == generate(model, {**params, "max_weight": 9}, 11)
        assert list(a.graph.vertices) == list(range(1, a.graph.n + 1))
    assert generate("gnp", {"n": 10, "p": 0.5}, 1) != generate("gnp", {"n": 10, "p": 0.5}, 2)


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("CVD_SEED", "42")
    assert generate("gnp", {"n": 10, "p": 0.5, "max_weight": 5}) == generate("gnp", {"n": 10, "p": 0.5, "max_weight": 5}, 42)


def test_generator_errors():
    with pytest.raises(ValueError):
        generate("nope", {}, 0)
    with pytest.raises(ValueError, match="needs parameter"):
        generate("gnp", {"n": 3}, 0)
    with pytest.raises(ValueError):
        generate("k5-gadget", {"pendants": 3}, 0)


def test_parse_model_spec():
    assert parse_model_spec("gnp:n=10,p=0.3") == ("gnp", {"n": "10", "p": "0.3"})
    assert parse_model_spec("bull-neighborhood") == ("bull-neighborhood", {})
    with pytest.raises(ValueError):
        parse_model_spec("gnp:n")


# -- solutions ----------------------------------------------------------------


def test_solution_json():
    wg = parse_instance(P3_TEXT)
    x, trace = cluster_vd_apx(wg)
    doc = solution_to_dict(x.vertices, wg.cost_of(x.vertices), True, True, trace)
    assert doc["vertices"] == [2] and doc["cost"] == "1"
    step = doc["trace"][0]
    assert step["op"] == "weight-subtraction"
    assert step["provenance"] == "SecondNeighborhood"
    assert json.loads(json.dumps(doc)) == doc
    assert load_solution_vertices(json.dumps(doc)) == [2]
    assert load_solution_vertices("[1, 3]") == [1, 3]
    with pytest.raises(ValueError):
        load_solution_vertices('{"cost": 1}')


# -- bench --------------------------------------------------------------------


def _corpus(tmp_path, count=4):
    d = tmp_path / "corpus"
    d.mkdir()
    for i in range(count):
        write_instance(d / f"g{i}.cvd", generate("gnp", {"n": 7, "p": 0.5, "max_weight": 5}, i))
    return d


def test_bench_empty_corpus(tmp_path):
    (tmp_path / "empty").mkdir()
    assert run_bench(tmp_path / "empty").rows == []
    with pytest.raises(FileNotFoundError):
        run_bench(tmp_path / "missing")
    with pytest.raises(ValueError):
        run_bench(tmp_path / "empty", ["magic"])


def test_bench_rows(tmp_path):
    corpus = _corpus(tmp_path)
    report = run_bench(corpus, ["lr94", "naive3", "p3sub", "exact"])
    assert len(report.rows) == 16
    assert [r.instance for r in report.rows[:4]] == ["g0.cvd"] * 4
    assert all(r.status == "ok" and r.feasible and r.minimal for r in report.rows)
    assert all(r.ratio is not None for r in report.rows)
    assert report.violations() == []
    assert {r.ratio_value for r in report.rows if r.algorithm == "exact"} == {1}


def test_bench_without_oracle(tmp_path):
    report = run_bench(_corpus(tmp_path), ["lr94"], oracle_max_n=0)
    assert all(r.ratio is None and r.oracle_cost is None for r in report.rows)


def test_bench_oracle_over_budget(tmp_path):
    report = run_bench(_corpus(tmp_path, 1), ["lr94"], budget=OracleBudget(max_branch_nodes=1))
    assert report.rows[0].status == "ok" and report.rows[0].ratio is None


def test_bench_bad_file(tmp_path):
    corpus = _corpus(tmp_path, 1)
    (corpus / "broken.cvd").write_text("p cvd 2 0\nv 1 1\n")
    report = run_bench(corpus, ["lr94", "naive3"])
    broken = [r for r in report.rows if r.instance == "broken.cvd"]
    assert [r.status for r in broken] == ["error", "error"]
    assert "no weight" in broken[0].error


def test_bench_parallel_matches_serial(tmp_path):
    corpus = _corpus(tmp_path)
    strip = lambda rep: [(r.instance, r.algorithm, r.cost, r.ratio) for r in rep.rows]  # noqa: E731
    assert strip(run_bench(corpus, jobs=2)) == strip(run_bench(corpus))


def test_violation_detection():
    rows = [
        BenchRow("a", 3, 2, "lr94", "ok", cost="3", oracle_cost="1", ratio="3"),
        BenchRow("b", 3, 2, "lr94", "bound-violated", cost="1", oracle_cost="0"),
        BenchRow("c", 3, 2, "naive3", "ok", cost="3", oracle_cost="1", ratio="3"),
    ]
    assert [r.instance for r in BenchReport(rows).violations()] == ["a", "b"]


def test_write_report(tmp_path):
    report = run_bench(_corpus(tmp_path), ["lr94", "naive3"])
    paths = write_report(report, tmp_path / "out")
    assert set(paths) == {"csv", "json", "ratio_hist", "cost_scatter"}
    for p in paths.values():
        assert p.exists() and p.stat().st_size > 0
    with open(paths["csv"]) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 8 and rows[0]["algorithm"] == "lr94"
    assert len(json.loads(paths["json"].read_text())) == 8
    assert set(write_report(report, tmp_path / "plain", figures=False)) == {"csv", "json"}


# -- CLI ----------------------------------------------------------------------


def test_cli_gen_and_solve(tmp_path, capsys):
    inst = tmp_path / "g.cvd"
    assert cli.main(["gen", "--model", "gnp:n=8,p=0.5,max_weight=4", "--seed", "3", "--out", str(inst)]) == 0
    assert cli.main(["solve", "--input", str(inst), "--trace"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["feasible"] and doc["minimal"] and doc["algorithm"] == "lr94"
    sol = tmp_path / "sol.json"
    sol.write_text(json.dumps(doc))
    assert cli.main(["verify", "--input", str(inst), "--solution", str(sol), "--require-minimal"]) == 0


def test_cli_solve_text(tmp_path, capsys):
    inst = tmp_path / "p3.cvd"
    inst.write_text(P3_TEXT)
    for algo in ("lr94", "naive3", "p3sub", "exact"):
        assert cli.main(["solve", "--algo", algo, "--input", str(inst), "--output", "text"]) == 0
        out = capsys.readouterr().out
        assert f"algorithm: {algo}" in out and "vertices: 2" in out


def test_cli_gen_stdout_and_count(tmp_path, capsys):
    assert cli.main(["gen", "--model", "cycle:n=5"]) == 0
    assert parse_instance(capsys.readouterr().out).graph.m == 5
    assert cli.main(["gen", "--model", "path:n=4", "--count", "3", "--out", str(tmp_path / "many")]) == 0
    assert len(list((tmp_path / "many").iterdir())) == 3
    assert cli.main(["gen", "--model", "path:n=4", "--count", "3"]) == 1


def test_cli_verify_failures(tmp_path, capsys):
    inst = tmp_path / "p3.cvd"
    inst.write_text(P3_TEXT)
    sol = tmp_path / "sol.json"
    sol.write_text("[]")
    assert cli.main(["verify", "--input", str(inst), "--solution", str(sol)]) == 2
    sol.write_text("[1, 2]")
    assert cli.main(["verify", "--input", str(inst), "--solution", str(sol)]) == 0
    assert cli.main(["verify", "--input", str(inst), "--solution", str(sol), "--require-minimal"]) == 2
    sol.write_text("[9]")
    assert cli.main(["verify", "--input", str(inst), "--solution", str(sol)]) == 1


def test_cli_usage_errors(tmp_path, capsys):
    assert cli.main(["solve", "--input", str(tmp_path / "missing.cvd")]) == 1
    bad = tmp_path / "bad.cvd"
    bad.write_text("p cvd 1 0\n")
    assert cli.main(["solve", "--input", str(bad)]) == 1
    assert "no weight" in capsys.readouterr().err
    with pytest.raises(SystemExit) as info:
        cli.main(["frobnicate"])
    assert info.value.code == 1
    assert cli.main(["bench", "--corpus", str(tmp_path), "--report", str(tmp_path / "r"), "--algos", "x"]) == 1


def test_cli_bench(tmp_path, capsys):
    corpus = _corpus(tmp_path)
    out = tmp_path / "report"
    assert cli.main(["bench", "--corpus", str(corpus), "--report", str(out), "--algos", "lr94,p3sub"]) == 0
    assert (out / "report.csv").exists() and (out / "ratio_hist.png").exists()
    assert "8 rows" in capsys.readouterr().out
