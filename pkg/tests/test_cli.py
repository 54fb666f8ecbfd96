import json

import pytest

from quatholonomy.algebra import get
from quatholonomy.cli import main
from quatholonomy.io import format_algebra


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and out.splitlines()[0].startswith("g1")
    code, out, _ = run(capsys, "catalog", "--json")
    rows = json.loads(out)
    assert len(rows) == 17 and rows[0]["name"] == "g1"
    code, out, _ = run(capsys, "catalog", "--family", "case-III", "--alpha", "1/2", "--beta", "0")
    assert "alpha=1/2" in out


def test_rspace(capsys):
    code, out, _ = run(capsys, "rspace", "g6", "--check-prop1")
    assert code == 0
    assert out.startswith("R(g6): dim 2")
    assert "matches closed-form conditions" in out
    code, out, _ = run(capsys, "rspace", "g4", "--json")
    assert json.loads(out)["dim"] == 5


def test_rspace_from_file(capsys, tmp_path):
    path = tmp_path / "mine.alg"
    path.write_text(format_algebra(get("g6")))
    code, out, _ = run(capsys, "rspace", str(path))
    assert code == 0 and "dim 2" in out


def test_berger(capsys):
    code, out, _ = run(capsys, "berger", "g5")
    assert code == 0 and out.strip().endswith("-> BERGER")
    code, out, _ = run(capsys, "berger", "case-I-3", "--alpha", "1", "--beta", "0")
    assert "NOT BERGER" in out


@pytest.mark.parametrize("name, dim", [("sp4R", 20), ("sl2C", 8), ("zero", 0)])
def test_prolongation(capsys, name, dim):
    code, out, _ = run(capsys, "prolongation", name, "--json")
    assert code == 0 and json.loads(out)["dim_prolongation"] == dim


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--lambda", "1/3", "--json")
    row = json.loads(out)
    assert code == 0 and row["lambda"] == "3/1" and row["algebra"] == "g4"
    code, out, _ = run(capsys, "classify", "--two-dim", "--json")
    assert json.loads(out)["lambda"] is None
    code, out, _ = run(capsys, "classify", "--d", "1", "0", "0", "2", "0")
    assert "canonical lambda = 2/1" in out


def test_errors_exit_2(capsys):
    code, _, err = run(capsys, "berger", "nope")
    assert code == 2 and err.startswith("error: unknown algebra")
    code, _, err = run(capsys, "catalog", "--family", "case-IV-1", "--alpha", "1", "--beta", "0")
    assert code == 2 and "leaves the span" in err
    code, _, err = run(capsys, "classify", "--d", "0", "0", "0", "0", "0")
    assert code == 2 and "does not span" in err
    code, _, err = run(capsys, "rspace", "/no/such/file.alg")
    assert code == 2


def test_verify_paper_is_deterministic(capsys, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    code, text, _ = run(capsys, "verify-paper", "--out", str(out1))
    assert code == 0 and text.strip().endswith("overall: PASS")
    main(["verify-paper", "--out", str(out2)])
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    report = json.loads(out1.read_text())
    assert all(c["status"] == "pass" for c in report["checks"])
