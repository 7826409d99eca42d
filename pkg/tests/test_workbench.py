import csv
import io
import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from griesskit.algebra import InvariantViolation, SchemaViolation
from griesskit.workbench import (
    Check,
    VerificationReport,
    WorkbenchConfig,
    build_from_name,
    export_algebra,
    fmt,
    import_algebra,
    run_suite,
    suite_checks,
)


def test_config_defaults_and_validation(tmp_path):
    p = tmp_path / "c.json"
    p.write_text("")
    assert WorkbenchConfig.from_file(p) == WorkbenchConfig()
    p.write_text('{"n_cap": 4, "format": "csv"}')
    cfg = WorkbenchConfig.from_file(p)
    assert cfg.n_cap == 4 and cfg.format == "csv"
    for bad in ('{"jobs": 0}', '{"format": "xml"}', '{"colour": 1}', "[1]", '{"d": true}'):
        p.write_text(bad)
        with pytest.raises(ValueError):
            WorkbenchConfig.from_file(p)


def test_n_cap_limits_suite():
    ids = [s[0] for s in suite_checks("family", WorkbenchConfig(n_cap=3))]
    assert "charge.X3" in ids and "charge.X4" not in ids
    assert not any(i.startswith("charge.f") and i[-1].isdigit() for i in ids)


@given(st.fractions())
def test_fmt_rationals(q):
    s = fmt(q)
    assert F(s) == q
    assert not s.endswith("/1")


def test_fmt_misc():
    assert fmt(True) == "true" and fmt(3) == "3" and fmt("x") == "x"


def _report():
    return VerificationReport("demo", [
        Check("a", 1, "anchor", "1/2", "1/2", True),
        Check("b", 2, "anchor, with comma", "3", "4", False),
    ], wall_time=1.234)


def test_report_formats():
    r = _report()
    assert r.exit_code == 1 and not r.all_pass
    rows = list(csv.reader(io.StringIO(r.to_csv())))
    assert rows[1] == ["a", "1", "anchor", "1/2", "1/2", "true"]
    assert r.to_csv().splitlines()[1].startswith('"a","1","anchor","1/2"')
    body = json.loads(r.to_json())
    assert body["summary"] == {"total": 2, "passed": 1}
    assert "FAIL [2] b" in r.to_text()


def test_checks_section_is_byte_deterministic():
    a = _report()
    b = _report()
    b.wall_time = 99.0
    assert a.checks_json() == b.checks_json()
    assert run_suite("catalog").checks_json() == run_suite("catalog").checks_json()


def test_export_import_roundtrip(tmp_path):
    p = tmp_path / "x2.json"
    text = export_algebra("xn:2", p)
    A = import_algebra(p)
    assert A.same_structure(build_from_name("xn:2"))
    assert export_algebra(A) == text
    assert import_algebra(text).dim == A.dim


def test_import_rejects_bad_models():
    A = build_from_name("2A")
    data = A.to_dict()
    with pytest.raises(SchemaViolation):
        import_algebra("{not json")
    with pytest.raises(SchemaViolation):
        import_algebra("[1, 2]")
    broken = json.loads(json.dumps(data))
    broken["product"][0][1][0] = "1/3"
    with pytest.raises(InvariantViolation):
        import_algebra(json.dumps(broken))
    broken = json.loads(json.dumps(data))
    broken["form"][0][0] = "one"
    with pytest.raises(SchemaViolation):
        import_algebra(json.dumps(broken))


def test_builder_names():
    assert build_from_name("abxy:2A").dim == 13
    assert build_from_name("lattice:A3").dim == 12
    with pytest.raises(ValueError):
        build_from_name("nothing:1")


def test_export_over_quadratic_field(tmp_path):
    from griesskit.algebra import conformal_vector, miyamoto_tau

    cfg = WorkbenchConfig(d=5)
    text = export_algebra("3A", config=cfg)
    A = import_algebra(text)
    assert A.d == 5 and json.loads(text)["field_d"] == 5
    vv = conformal_vector(A, [A.basis(i) for i in range(A.dim)])
    assert vv.central_charge == F(58, 35)
    t = miyamoto_tau(A, A["a"])
    assert t(A["b"]) == A["c"]
    with pytest.raises(ValueError):
        WorkbenchConfig(d=4)
