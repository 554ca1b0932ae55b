"""
Table, JSON and CSV emitters for command reports
"""
import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from models.cyclotomic import CycInt


@dataclass
class Report:
    """One command result: a JSON payload plus a flat table view of it"""
    title: str
    payload: Dict[str, Any]
    columns: List[str] = field(default_factory=list)
    rows: List[List[Any]] = field(default_factory=list)
    footer: List[str] = field(default_factory=list)


def to_jsonable(value: Any) -> Any:
    """Exact values keep their exactness: CycInt as {"p", "coeffs"}, rationals as {"num", "den"}"""
    if isinstance(value, CycInt):
        return value.to_dict()
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(_cell(v) for v in value) + ")"
    return str(value)


def emit_table(report: Report) -> str:
    lines = [report.title, ""]
    if report.columns:
        cells = [[_cell(v) for v in row] for row in report.rows]
        widths = [len(c) for c in report.columns]
        for row in cells:
            for i, v in enumerate(row):
                widths[i] = max(widths[i], len(v))
        lines.append("  ".join(c.ljust(w) for c, w in zip(report.columns, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for row in cells:
            lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    if report.footer:
        lines.append("")
        lines.extend(report.footer)
    return "\n".join(lines) + "\n"


def emit_json(report: Report) -> str:
    return json.dumps(to_jsonable(report.payload), sort_keys=True, indent=2) + "\n"


def emit_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


EMITTERS = {"table": emit_table, "json": emit_json, "csv": emit_csv}


def emit(report: Report, fmt: str, output: Optional[str] = None) -> str:
    text = EMITTERS[fmt](report)
    if output:
        with open(output, "w") as f:
            f.write(text)
    return text
