import csv
import io
import json

import pytest

from griesskit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_catalog_table(capsys):
    code, out, _ = run(capsys, "catalog", "--table")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 10 and rows[0][0] == "type"


def test_catalog_type(capsys):
    code, out, _ = run(capsys, "catalog", "3A")
    body = json.loads(out)
    assert code == 0 and body["inner_product_2^10"] == 13 and body["algebra"]["dim"] == 4


def test_catalog_errors(capsys):
    assert run(capsys, "catalog", "4A")[0] == 2
    assert run(capsys, "catalog")[0] == 2


def test_fusion(capsys):
    code, out, _ = run(capsys, "fusion", "--n", "1", "--n", "2")
    body = json.loads(out)
    assert code == 0 and body["1"]["c"] == "1/2" and body["2"]["c"] == "7/10"
    assert run(capsys, "fusion", "--n", "0")[0] == 2


def test_build_and_group(tmp_path, capsys):
    model = tmp_path / "x2.json"
    assert run(capsys, "build", "xn", "--n", "2", "--out", str(model))[0] == 0
    code, out, _ = run(capsys, "group", "--model", str(model), "--seeds", "a,b", "--flavor", "tau")
    rep = json.loads(out)
    assert code == 0 and rep["order"] == 6 and rep["three_transposition"] is True


def test_group_errors(tmp_path, capsys):
    model = tmp_path / "m.json"
    model.write_text("{}")
    assert run(capsys, "group", "--model", str(model), "--seeds", "a")[0] == 2
    assert run(capsys, "group", "--model", str(tmp_path / "missing.json"), "--seeds", "a")[0] == 2
    run(capsys, "build", "xn", "--n", "1", "--out", str(model))
    assert run(capsys, "group", "--model", str(model), "--seeds", "nope")[0] == 2
    # a is not of sigma type in X^[1]
    assert run(capsys, "group", "--model", str(model), "--seeds", "a,x1", "--flavor", "sigma")[0] == 1


def test_build_abxy(capsys):
    code, out, _ = run(capsys, "build", "abxy", "--type", "2A")
    assert code == 0 and json.loads(out)["dim"] == 13
    assert run(capsys, "build", "abxy", "--type", "5A")[0] == 2
    assert run(capsys, "build", "xn")[0] == 2
    assert run(capsys, "build", "xn", "--n", "40")[0] == 2


def test_lattice_eta_frame_csv(capsys):
    code, out, _ = run(capsys, "lattice", "--type", "A5", "--eta-frame", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[1] == ["eta1", "1/2", "1/2"] and len(rows) == 6
    assert out.splitlines()[1] == '"eta1","1/2","1/2"'


def test_lattice_summary(capsys):
    code, out, _ = run(capsys, "--format", "json", "lattice", "--type", "D4")
    assert code == 0 and json.loads(out)["dim"] == 22
    assert run(capsys, "lattice", "--type", "Z9")[0] == 2


def test_usage_errors(capsys, tmp_path):
    assert run(capsys)[0] == 2
    assert run(capsys, "bogus")[0] == 2
    bad = tmp_path / "c.json"
    bad.write_text('{"colour": "red"}')
    assert run(capsys, "--config", str(bad), "catalog", "2A")[0] == 2
    assert run(capsys, "--config", str(tmp_path / "none.json"), "catalog", "2A")[0] == 2
    empty = tmp_path / "e.json"
    empty.write_text("")
    assert run(capsys, "--config", str(empty), "catalog", "2A")[0] == 0


def test_verify_catalog(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code, _, _ = run(capsys, "verify", "--suite", "catalog", "--format", "csv", "--out", str(out))
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert code == 0
    assert all(r[-1] == "true" for r in rows[1:])
    assert out.read_text().splitlines()[1].startswith('"catalog.1A.inner_product","1"')
