import json

from config.run_config import RunConfig
from main import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, run


def run_json(capsys, *argv):
    code = run(list(argv) + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_counts_json(capsys):
    code, data = run_json(capsys, "counts", "--n", "3", "--q", "2")
    assert code == EXIT_OK
    assert data == {"orbits": {"0": 8, "2": 6}, "classes": {"0": 4, "1": 6, "2": 4}}


def test_counts_for_n_one(capsys):
    code, data = run_json(capsys, "counts", "--n", "1", "--q", "5")
    assert code == EXIT_OK
    assert data == {"orbits": {"0": 5}, "classes": {"0": 5}}


def test_counts_table_with_plot(tmp_path, capsys):
    plot = tmp_path / "counts.png"
    assert run(["counts", "--n", "3", "--q", "3", "--plot", str(plot)]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("Counts for G_3(F_3)")
    assert "chart saved" in out
    assert plot.exists()


def test_orbits_per_partition(capsys):
    code, data = run_json(capsys, "orbits", "--n", "3", "--q", "3")
    assert code == EXIT_OK
    assert data["2+1"] == {"dimension": 2, "count": 6}
    assert sum(v["count"] for v in data.values()) == 51


def test_orbits_enumerated(capsys):
    code, data = run_json(capsys, "orbits", "--n", "2", "--q", "2", "--enumerate")
    assert code == EXIT_OK
    assert len(data["orbits"]) == 5


def test_classes_enumerated_csv(capsys):
    assert run(["classes", "--n", "2", "--q", "3", "--enumerate", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "a,b,size,b-invariants"
    assert len(lines) == 1 + 11


def test_partitions_flocks(capsys):
    code, data = run_json(capsys, "partitions", "--n", "6", "--flocks")
    assert code == EXIT_OK
    kinds = [f["type"] for f in data["flocks"]]
    assert (kinds.count("odd"), kinds.count("even")) == (8, 13)


def test_partitions_containers_and_compositions(capsys):
    code, data = run_json(capsys, "partitions", "--n", "4", "--containers")
    assert code == EXIT_OK
    assert len(data["containers"]) == 8
    code, data = run_json(capsys, "partitions", "--n", "4")
    assert len(data["compositions"]) == 8


def test_irreps_and_character_table(capsys):
    code, data = run_json(capsys, "irreps", "--n", "2", "--q", "3")
    assert code == EXIT_OK
    assert sorted(r["dim"] for r in data["irreducibles"]) == [1] * 9 + [3, 3]
    code, data = run_json(capsys, "irreps", "--n", "2", "--q", "3", "--char-table")
    assert code == EXIT_OK
    assert len(data["rows"]) == len(data["classes"]) == 11


def test_model_command(capsys):
    code, data = run_json(capsys, "model", "--n", "3", "--q", "2")
    assert code == EXIT_OK
    assert data["multiplicities"]["passed"]
    assert data["multiplicities"]["model_dimension"] == data["multiplicities"]["irreducible_dimension_sum"]


def test_verify_command(capsys):
    code, data = run_json(capsys, "verify", "--n", "2", "--q", "2", "--suite", "chars", "--samples", "100")
    assert code == EXIT_OK
    assert data["passed"] and data["suites"] == ["chars"]


def test_output_file_and_config(tmp_path, capsys):
    config_path = tmp_path / "run.json"
    RunConfig(n=2, q=5, format="json").save_to_file(str(config_path))
    out_path = tmp_path / "counts.json"
    assert run(["counts", "--config", str(config_path), "--output", str(out_path)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(out_path.read_text())["orbits"] == {"0": 25, "2": 4}


def test_usage_errors():
    assert run([]) == EXIT_USAGE
    assert run(["counts", "--q", "4"]) == EXIT_USAGE
    assert run(["counts", "--format", "yaml"]) == EXIT_USAGE
    assert run(["counts", "--config", "/nonexistent/run.json"]) == EXIT_USAGE


def test_budget_exit_code():
    assert run(["orbits", "--enumerate", "--n", "6", "--q", "5", "--preset", "quick"]) == EXIT_BUDGET


def test_parser_lists_every_command():
    parser = build_parser()
    for command in ("counts", "orbits", "classes", "partitions", "irreps", "model", "verify"):
        assert parser.parse_args([command]).command == command


def test_failures_exit_code(monkeypatch):
    monkeypatch.setattr("main.VerificationManager.run", lambda self, suite="all": False)
    assert run(["verify", "--n", "1", "--q", "2"]) == EXIT_FAILED
