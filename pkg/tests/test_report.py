from fractions import Fraction

from dgla.formal import CoefficientRing, FormalElement
from dgla.report import (
    RunReport,
    canonical_json,
    element_data,
    emit_report,
    parse_report,
    rational_str,
)


def F(x):
    return Fraction(x)


def test_rational_strings():
    assert rational_str(F("1/2")) == "1/2"
    assert rational_str(F(-3)) == "-3"
    assert rational_str(F(0)) == "0"


def test_element_data_zero_and_terms():
    ring = CoefficientRing.single(3)
    assert element_data(FormalElement.zero(ring, 1, 2)) == "0"
    e = FormalElement(ring, 1, 2, {(2,): (F(0), F("-1/2"))})
    assert element_data(e) == {"degree": 1, "terms": {"t^2": ["0", "-1/2"]}}


def test_empty_report_canonical_form():
    r = RunReport()
    assert emit_report(r, "json") == b'{"stages":[]}\n'


def test_canonical_json_is_stable():
    a = canonical_json({"b": 1, "a": [2, {"z": "0", "y": "1/3"}]})
    b = canonical_json({"a": [2, {"y": "1/3", "z": "0"}], "b": 1})
    assert a == b


def test_report_round_trip():
    r = RunReport(input_info={"path": "p", "sha256": "00"},
                  options={"order": 4})
    r.add_stage("s1", data={"k": ["1/2", "3"]},
                checks=[("alpha", True), ("beta", False)])
    r.add_stage("s2", data={}, checks=[])
    blob = emit_report(r, "json")
    again = parse_report(blob)
    assert again == r
    assert emit_report(again, "json") == blob
    assert not r.all_pass()
    assert r.failed_checks() == [("s1", "beta")]


def test_text_format_marks_and_result():
    r = RunReport()
    r.add_stage("probe", data={"value": "1/2"},
                checks=[("good", True), ("bad", False)])
    text = emit_report(r, "text").decode()
    assert "[PASS] good" in text
    assert "[FAIL] bad" in text
    assert "== probe ==" in text
    assert "FAILED" in text
    plain = emit_report(r, "text", color=False).decode()
    assert "\x1b[" not in plain
    colored = emit_report(r, "text", color=True).decode()
    assert "\x1b[" in colored


def test_all_pass_on_empty_and_passing():
    r = RunReport()
    assert r.all_pass()
    r.add_stage("s", data={}, checks=[("ok", True)])
    assert r.all_pass()
