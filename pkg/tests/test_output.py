import json
from fractions import Fraction

import pytest


def _make_outcome(passed=True):
    from lah_bell.report import CheckReport
    from lah_bell.runner import SuiteOutcome

    ok = CheckReport("spivey", {"n": 1, "m": 1})
    ok.record(True)
    reports = [ok]
    if not passed:
        bad = CheckReport("spivey", {"n": 1, "m": 2})
        bad.expect_equal(Fraction(1, 2), 1, identity="polynomial")
        reports.append(bad)
    return SuiteOutcome("spivey", {"n_max": 1, "m_max": 2}, reports)


def test_render_value():
    from lah_bell.output.formatter import render_value
    from lah_bell.poly.dense import Poly

    assert render_value(3) == "3"
    assert render_value(Fraction(-2, 4)) == "-1/2"
    assert render_value(Poly((0, 2), "l")) == "2*l"
    assert render_value({1: [Fraction(1, 3), None, True]}) == {"1": ["1/3", None, True]}


def test_output_record_is_deterministic():
    from lah_bell.output.formatter import OutputRecord

    a = OutputRecord("poly", {"n": 2, "family": "lb"}, "2*x + x^2").to_json()
    b = OutputRecord("poly", {"family": "lb", "n": 2}, "2*x + x^2").to_json()
    assert a == b
    data = json.loads(a)
    assert data["schema_version"] == "1"
    assert data["params"] == {"family": "lb", "n": "2"}
    with pytest.raises(ValueError):
        OutputRecord("poly", status="maybe")


def test_table_csv():
    from lah_bell.output.formatter import table_csv
    from lah_bell.tables import triangle

    text = table_csv(triangle("lah", 3).rows)
    lines = text.splitlines()
    assert lines[0] == "n,k,value"
    assert lines[-1] == "3,3,1"
    assert len(lines) == 11


def test_table_bfile():
    from lah_bell.errors import UnsupportedCombination
    from lah_bell.output.formatter import bfile_index, table_bfile
    from lah_bell.poly.dense import Poly
    from lah_bell.tables import triangle

    assert [bfile_index(n, k) for n in range(3) for k in range(n + 1)] == list(range(6))
    lines = table_bfile(triangle("lah", 3).rows).splitlines()
    assert lines[0] == "0 1"
    assert lines[-1] == "9 1"
    with pytest.raises(UnsupportedCombination):
        table_bfile([[Fraction(1, 2)]])
    with pytest.raises(UnsupportedCombination):
        table_bfile([[Poly((0, 1), "l")]])


def test_table_json_round_trip():
    from lah_bell.output.formatter import parse_table_json, table_record
    from lah_bell.poly.families import lambda_r_lah
    from lah_bell.tables import triangle

    rows = triangle("r_lah", 5, 2).rows
    text = table_record("rlah", {"n_max": 5, "r": 2}, rows).to_json()
    assert [tuple(row) for row in parse_table_json(text)] == list(rows)

    lam_rows = [[lambda_r_lah(n, k, 1) for k in range(n + 1)] for n in range(4)]
    text = table_record("lambda-rlah", {"n_max": 3, "r": 1}, lam_rows).to_json()
    assert parse_table_json(text) == lam_rows


def test_verify_report_text():
    from lah_bell.output.formatter import first_counterexample, format_verify_report

    text = format_verify_report([_make_outcome()])
    assert text.startswith("spivey: PASS (1 checks, 1 comparisons")
    assert text.endswith("all suites passed\n")

    failing = [_make_outcome(passed=False)]
    text = format_verify_report(failing)
    assert "spivey: FAIL" in text
    assert "FAIL spivey n=1 m=2 (lhs=1/2, rhs=1, identity=polynomial)" in text
    assert first_counterexample(failing).startswith("FAIL spivey n=1 m=2")


def test_verify_record():
    from lah_bell.output.formatter import verify_record

    data = json.loads(verify_record([_make_outcome(passed=False)], {"suite": "spivey"}).to_json())
    assert data["status"] == "fail"
    assert data["results"][0]["reports"][1]["failures"][0]["lhs"] == "1/2"


def test_dobinski_fields():
    from lah_bell.dobinski import dobinski_eval
    from lah_bell.output.formatter import dobinski_fields

    fields = dobinski_fields(dobinski_eval(2, 0, 1))
    assert fields["exact"] == "3"
    assert fields["approx"].startswith("3.0") or fields["approx"].startswith("2.9999")
    assert fields["precision_bits"] == 256


def test_output_record_renders_nested_polynomials_as_text():
    from lah_bell.output.formatter import OutputRecord
    from lah_bell.poly.dense import BiPoly, Poly

    failure = {"lhs": Poly((0, 2, 1)), "rhs": Poly((0, 1, 1)), "n": 1}
    record = OutputRecord("verify", {"suite": "spivey"}, [{"failures": [failure]}], status="fail")
    data = json.loads(record.to_json())
    assert data["results"][0]["failures"][0] == {"lhs": "2*x + x^2", "rhs": "x + x^2", "n": "1"}
    bi = BiPoly.linear(Poly((0, 1), "l"), 2)
    assert json.loads(OutputRecord("poly", results={"value": bi}).to_json())["results"] == {"value": str(bi)}
