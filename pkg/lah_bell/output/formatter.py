"""
Rendering of command results: JSON records, CSV and b-file tables, text reports.

Every exact number is written as a string ("p" or "p/q"); high-precision floats
are the only inexact values and always travel with their error bound.
"""

import csv
import io
import json
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Any, Dict, List, Sequence

import mpmath

from ..config import SCHEMA_VERSION
from ..errors import UnsupportedCombination
from ..poly.dense import BiPoly, Poly, format_scalar
from ..report import CheckReport

HP_DIGITS = 30
BOUND_DIGITS = 6
STATUSES = ("pass", "fail", "value")


def render_value(value: Any) -> Any:
    """JSON-ready form: exact numbers and polynomials become strings, containers recurse."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return format_scalar(value)
    if isinstance(value, mpmath.mpf):
        return mpmath.nstr(value, HP_DIGITS)
    if isinstance(value, dict):
        return {str(k): render_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render_value(v) for v in value]
    return str(value)


@dataclass
class OutputRecord:
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    results: Any = None
    status: str = "value"
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status: {self.status}")

    def to_json(self) -> str:
        data = {f.name: getattr(self, f.name) for f in fields(self)}
        return json.dumps(render_value(data), sort_keys=True, indent=2, ensure_ascii=False)


def bfile_index(n: int, k: int) -> int:
    """Row-major position of (n, k) in a triangle: n(n+1)/2 + k."""
    return n * (n + 1) // 2 + k


def table_csv(rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "k", "value"])
    for n, row in enumerate(rows):
        for k, value in enumerate(row):
            writer.writerow([n, k, render_value(value)])
    return buffer.getvalue()


def table_bfile(rows: Sequence[Sequence[Any]]) -> str:
    """OEIS-style "idx value" lines; only integer triangles can be written."""
    lines = []
    for n, row in enumerate(rows):
        for k, value in enumerate(row):
            if isinstance(value, Poly) or Fraction(value).denominator != 1:
                raise UnsupportedCombination(f"b-file needs integer values, got {value} at ({n}, {k})")
            lines.append(f"{bfile_index(n, k)} {format_scalar(value)}")
    return "\n".join(lines) + "\n"


def _table_json_value(value: Any) -> Any:
    if isinstance(value, Poly):
        return [format_scalar(c) for c in value.coeffs]
    return format_scalar(value)


def table_record(kind: str, params: Dict[str, Any], rows: Sequence[Sequence[Any]]) -> OutputRecord:
    values = [[_table_json_value(v) for v in row] for row in rows]
    return OutputRecord("table", params, {"kind": kind, "values": values}, "value")


def parse_table_json(text: str, var: str = "l") -> List[List[Any]]:
    """Rows of a `table --format json` document: Fractions, or Polys for coefficient lists."""
    data = json.loads(text)
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version: {data.get('schema_version')}")
    rows = []
    for row in data["results"]["values"]:
        parsed = []
        for value in row:
            if isinstance(value, list):
                parsed.append(Poly([Fraction(c) for c in value], var))
            else:
                parsed.append(Fraction(value))
        rows.append(parsed)
    return rows


def render_poly(value: Any) -> str:
    if isinstance(value, (Poly, BiPoly)):
        return str(value)
    return format_scalar(value)


def report_dict(report: CheckReport) -> Dict[str, Any]:
    out = {
        "name": report.name,
        "params": report.params,
        "passed": report.passed,
        "checked": report.checked,
        "failures": report.failures,
    }
    if report.error is not None:
        out["error"] = report.error
    return out


def _format_params(params: Dict[str, Any]) -> str:
    return " ".join(f"{k}={render_value(v)}" for k, v in params.items())


def format_failure(report: CheckReport) -> str:
    if report.error is not None:
        return f"  FAIL {report.name} {_format_params(report.params)}: {report.error}"
    first = render_value(report.first_failure() or {})
    context = ", ".join(f"{k}={v}" for k, v in first.items())
    return f"  FAIL {report.name} {_format_params(report.params)} ({context})"


def format_verify_report(outcomes) -> str:
    """Per-suite summary line, then one line per failing check."""
    lines = []
    for outcome in outcomes:
        checked = sum(r.checked for r in outcome.reports)
        status = "PASS" if outcome.passed else "FAIL"
        lines.append(
            f"{outcome.suite}: {status} ({len(outcome.reports)} checks, {checked} comparisons, "
            f"bounds {_format_params(outcome.bounds)})"
        )
        lines.extend(format_failure(report) for report in outcome.failed)
    total_failed = sum(len(o.failed) for o in outcomes)
    lines.append("all suites passed" if total_failed == 0 else f"{total_failed} checks failed")
    return "\n".join(lines) + "\n"


def verify_record(outcomes, params: Dict[str, Any]) -> OutputRecord:
    results = [
        {"suite": o.suite, "bounds": o.bounds, "passed": o.passed, "reports": [report_dict(r) for r in o.reports]}
        for o in outcomes
    ]
    status = "pass" if all(o.passed for o in outcomes) else "fail"
    return OutputRecord("verify", params, results, status)


def first_counterexample(outcomes) -> str:
    for outcome in outcomes:
        for report in outcome.failed:
            return format_failure(report).strip()
    return ""


def dobinski_fields(result) -> Dict[str, Any]:
    with mpmath.workprec(result.precision_bits):
        return {
            "approx": mpmath.nstr(result.approx, HP_DIGITS),
            "tail_bound": mpmath.nstr(result.tail_bound, BOUND_DIGITS),
            "terms_used": result.terms_used,
            "exact": format_scalar(result.exact_reference),
            "error": mpmath.nstr(result.error, BOUND_DIGITS),
            "precision_bits": result.precision_bits,
        }


def format_dobinski(result) -> str:
    fields = dobinski_fields(result)
    return "\n".join(f"{key}: {value}" for key, value in fields.items()) + "\n"


def format_distribution(n: int, distribution: Dict[int, int]) -> str:
    parts = ", ".join(f"{k}: {v}" for k, v in distribution.items())
    return f"n={n} total={sum(distribution.values())} by blocks {{{parts}}}\n"
