import json
from fractions import Fraction

from models.cyclotomic import CycInt
from reporting.charts import CountsChart
from reporting.emitters import Report, emit, emit_csv, emit_json, emit_table, to_jsonable


def sample_report():
    return Report(
        "Sample",
        {"value": CycInt.zeta_power(3, 1), "ratio": Fraction(1, 2), 2: [1, 2]},
        ["name", "cells"],
        [["a", [1, 2]], ["bb", "x"]],
        ["done"],
    )


def test_to_jsonable_keeps_exact_values():
    assert to_jsonable(CycInt.zeta_power(3, 1)) == {"p": 3, "coeffs": [0, 1]}
    assert to_jsonable(Fraction(3, 4)) == {"num": 3, "den": 4}
    assert to_jsonable({1: (2, 3)}) == {"1": [2, 3]}


def test_json_emitter():
    data = json.loads(emit_json(sample_report()))
    assert data == {"value": {"p": 3, "coeffs": [0, 1]}, "ratio": {"num": 1, "den": 2}, "2": [1, 2]}


def test_table_emitter():
    lines = emit_table(sample_report()).splitlines()
    assert lines[0] == "Sample"
    assert lines[2] == "name  cells"
    assert lines[4] == "a     (1,2)"
    assert lines[-1] == "done"


def test_csv_emitter():
    assert emit_csv(sample_report()) == "name,cells\na,\"(1,2)\"\nbb,x\n"


def test_emit_writes_output(tmp_path):
    path = tmp_path / "out.json"
    text = emit(sample_report(), "json", str(path))
    assert path.read_text() == text


def test_counts_chart(tmp_path):
    chart = CountsChart(3, 2, {0: 8, 2: 6}, {0: 4, 1: 6, 2: 4})
    assert chart.save_chart(str(tmp_path / "counts.png"))
    assert (tmp_path / "counts.png").stat().st_size > 0
    assert chart.get_chart_summary() == {
        "n": 3, "q": 2, "orbit_total": 14, "class_total": 14, "max_orbit_dimension": 2, "max_class_dimension": 2,
    }


def test_counts_chart_reports_failed_save(tmp_path):
    chart = CountsChart(1, 2, {0: 2}, {0: 2})
    assert not chart.save_chart(str(tmp_path / "missing" / "counts.png"))
