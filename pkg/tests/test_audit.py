import json

import pytest

from qbernoulli.audit import (
    AUDIT,
    CATALOG,
    MUST,
    OUT_OF_SCOPE,
    anchors_covered,
    case_ids,
    get_case,
    run_audit,
    run_case,
)
from qbernoulli.errors import UnknownCaseId

REQUIRED_MUST = {
    "EQ02-FORM1", "EQ03-PARTITION", "EQ05", "EQ06", "EQ08-NEWTON", "EQ10-EQ11-EQUIV",
    "EQ12-C2-READING", "EQ15", "EQ16", "EQ18-BRIDGE", "EQ19", "EQ20", "EQ21",
    "EQ22-VS-PRODUCT", "EQ23-CORRECTED", "EQ24-VS-PRODUCT", "EQ26-THM4-EQUIV", "EQ29",
    "EQ28-EQ30-EQUIV", "EQ31", "MOMENT-SUM", "S2-BETA-REL", "FINAL-S1-PRODUCT",
    "EQ33-CORRECTED-FINITE", "EQ33-SERIES", "EQ34-EQ35-EQUIV", "PROP6", "THM1-CORRECTED",
    "THM3", "EULER-CLOSED-VS-INTEGRAL",
}
REQUIRED_AUDIT = {
    "EQ02-FORM2", "EQ12-PRINTED", "EQ13-PRINTED", "EQ23-PRINTED", "EQ33-PRINTED-FINITE",
    "THM1-PRINTED", "THM2-PRINTED", "S2-BETA-PRINTED-SUPERSCRIPT",
}


def test_catalog_shape():
    ids = case_ids()
    assert len(ids) == len(set(ids))
    expected = {c.id: c.expected for c in CATALOG}
    assert all(expected[i] == MUST for i in REQUIRED_MUST)
    assert all(expected[i] == AUDIT for i in REQUIRED_AUDIT)
    for case in CATALOG:
        assert case.ranges and all(lo <= hi for lo, hi in case.ranges.values())
        assert case.anchors and case.description
        assert next(case.grid(), None) is not None


def test_catalog_completeness():
    covered = anchors_covered()
    needed = [f"eq{i}" for i in range(1, 36)] + [f"thm{i}" for i in range(1, 6)] + ["prop6"]
    needed += ["sec3:moment-sum", "sec3:s2-beta", "sec3:final-product"]
    assert [a for a in needed if a not in covered] == []
    assert len(OUT_OF_SCOPE) == 3


def test_spec_examples():
    r = run_case("EQ03-PARTITION")
    assert r.status == "pass" and r.checked == 66
    r = run_case("THM1-PRINTED")
    assert r.status == "expected-fail-confirmed"
    assert r.counterexample == {"params": {"m": 0}, "lhs": "1", "rhs": "q"}
    assert run_case("EQ31").status == "pass"


@pytest.mark.parametrize("cid,params", [
    ("EQ13-PRINTED", {"n": 0}),
    ("EQ23-PRINTED", {"n": 1}),
    ("THM2-PRINTED", {"n": 1}),
    ("EQ12-PRINTED", {"n": 1, "x": 1}),
])
def test_printed_counterexamples(cid, params):
    r = run_case(cid)
    assert r.status == "expected-fail-confirmed"
    assert r.counterexample["params"] == params


def test_unknown_id():
    with pytest.raises(UnknownCaseId):
        get_case("NO-SUCH")
    with pytest.raises(UnknownCaseId):
        run_audit(["EQ31", "NO-SUCH"])


def test_overrides_and_max_n():
    rep = run_audit(["EQ31"], overrides={"EQ31": {"k": (1, 3)}})
    assert rep.results[0].ranges == {"k": (1, 3)} and rep.results[0].checked == 3
    rep = run_audit(["EQ01-FALLING"], max_n=3)
    assert rep.results[0].ranges == {"x": (0, 3), "k": (0, 3)}
    with pytest.raises(ValueError):
        run_audit(["EQ31"], overrides={"EQ31": {"zz": (1, 3)}})


def test_failing_must_pass_is_reported():
    # a must-pass case can only fail if the identity breaks; emulate by swapping in the printed check
    case = get_case("THM1-CORRECTED")
    broken = type(case)(case.id, MUST, case.ranges, case.description, case.anchors, get_case("THM1-PRINTED").check)
    r = run_case(broken)
    assert r.status == "fail" and r.counterexample is not None


def test_report_is_deterministic_and_ordered():
    sel = ["EQ31", "THM1-PRINTED", "EQ06"]
    a = run_audit(sel).to_json()
    b = run_audit(list(reversed(sel))).to_json()
    assert a == b
    doc = json.loads(a)
    assert [c["id"] for c in doc["cases"]] == sorted(sel)
    assert list(doc) == ["version", "catalog_version", "cases", "summary", "notes", "out_of_scope"]
    assert doc["summary"] == {"pass": 2, "fail": 0, "expected_fail_confirmed": 1}
    assert all(c["ms"] is None for c in doc["cases"])
    timed = json.loads(run_audit(["EQ31"], timings=True).to_json())
    assert isinstance(timed["cases"][0]["ms"], float)
