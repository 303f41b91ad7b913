from __future__ import annotations

import json
import subprocess
import sys

import pytest

from omnicolor.cli import main, run
from omnicolor.fileformat import dump_algebra_file
from omnicolor.fixtures import FIXTURES, fixture


def report(argv):
    r, code, text = run(argv)
    return code, json.loads(text)


@pytest.mark.parametrize("argv, code", [
    (["check", "lie", "--fixture", "gl11"], 0),
    (["check", "lie", "--fixture", "broken-jacobi"], 1),
    (["check", "bicharacter", "--fixture", "color-gl-z3z3"], 0),
    (["check", "leibniz", "--fixture", "heisenberg-z2z2"], 0),
    (["check", "representation", "--fixture", "gl11"], 0),
    (["check", "quadratic", "--fixture", "sl2-killing"], 0),
    (["omni", "leibniz", "--max-dim", "2"], 0),
    (["omni", "check-leibniz", "--fixture", "abelian-z2-dim2"], 0),
    (["omni", "homotopy", "--fixture", "abelian-z2-dim2"], 0),
    (["omni", "verify-homotopy", "--max-dim", "1"], 0),
    (["omni", "dirac", "--fixture", "gl11"], 0),
    (["omni", "dirac", "--fixture", "broken-jacobi", "--subspace", "graph"], 1),
    (["omni", "dirac-from-lie", "--fixture", "gl11"], 0),
    (["omni", "dirac-from-lie", "--fixture", "broken-jacobi"], 1),
    (["omni", "lie-from-dirac", "--fixture", "gl11", "--subspace", "graph"], 0),
    (["omni", "derivations", "--fixture", "gl11"], 0),
    (["l2", "check", "--fixture", "omni-z2-dim2"], 0),
    (["l2", "check", "--fixture", "broken-l3"], 1),
    (["l2", "from-omni", "--fixture", "abelian-z2-dim2"], 0),
    (["l2", "string", "--fixture", "sl2-killing"], 0),
    (["l2", "skeletal", "--fixture", "broken-l3"], 1),
    (["l2", "strict-to-crossed", "--fixture", "omni-z2-dim2"], 1),
    (["l2", "crossed-to-strict", "--fixture", "inn-der"], 0),
    (["l2", "crossed-to-strict", "--fixture", "crossed-broken"], 1),
    (["lc2", "jacobiator", "--fixture", "omni-z2-dim2"], 0),
    (["lc2", "check-jacobiator", "--fixture", "broken-l3"], 1),
    (["lc2", "roundtrip", "--fixture", "broken-l3"], 0),
    (["suite", "--seed", "5", "--samples", "4"], 0),
])
def test_exit_codes(argv, code):
    got, rep = report(argv)
    assert got == code, json.dumps(rep, indent=1)[:2000]
    assert rep["passed"] == (code == 0)
    if code == 1 and "error" not in rep:
        failed = [c for v in rep["verdicts"].values() for c in v["checks"].values() if c["passed"] is False]
        assert failed and all("witness" in c for c in failed)


@pytest.mark.parametrize("argv", [
    ["l2", "check", "--fixture", "omni-z2-dim2", "--h-form", "as-printed"],
    ["check", "lie"],
    ["check", "lie", "--fixture", "omni-z2-dim2"],
    ["check", "frobnicate", "--fixture", "gl11"],
    ["bogus"],
    ["check", "lie", "--fixture", "nope"],
    ["omni", "dirac", "--fixture", "gl11", "--subspace", "missing"],
])
def test_usage_errors_exit_2(argv):
    code, rep = report(argv)
    assert code == 2 and "error" in rep and rep["error"]["kind"] == "usage"


def test_unbound_symbol_report():
    _, rep = report(["l2", "check", "--fixture", "omni-z2-dim2", "--h-form", "as-printed"])
    assert rep["error"]["type"] == "UnboundSymbol"


def test_witness_sides_are_literals():
    _, rep = report(["check", "lie", "--fixture", "broken-jacobi"])
    w = rep["verdicts"]["lie-color"]["checks"]["jacobi-J1"]["witness"]
    assert w == {"args": ["e11", "e12", "e21"], "lhs": {"e11": "-1"}, "rhs": {}}


def test_precondition_failure_reports_verdict():
    code, rep = report(["l2", "crossed-to-strict", "--fixture", "crossed-broken"])
    assert code == 1
    assert rep["verdicts"]["crossed-module"]["checks"]["equivariance"]["passed"] is False


def test_file_input_and_digest(tmp_path):
    path = tmp_path / "gl11.json"
    text = dump_algebra_file(fixture("gl11"))
    path.write_text(text, encoding="utf-8")
    code, rep = report(["check", "lie", str(path)])
    _, rep2 = report(["check", "lie", "--fixture", "gl11"])
    assert code == 0 and rep["input"]["sha256"] == rep2["input"]["sha256"]
    bad = tmp_path / "bad.json"
    bad.write_text('{"cyclotomic_order": 2,', encoding="utf-8")
    code, rep = report(["check", "lie", str(bad)])
    assert code == 2 and rep["error"]["type"] == "ParseError"


def test_reports_are_deterministic():
    for argv in (["suite", "--seed", "11", "--samples", "3"], ["lc2", "jacobiator", "--fixture", "broken-l3"],
                 ["omni", "derivations", "--fixture", "gl11"]):
        assert run(argv)[2] == run(argv)[2]
    _, rep = report(["suite", "--seed", "11", "--samples", "3"])
    assert rep["seed"] == 11


def test_text_and_json_agree():
    argv = ["check", "lie", "--fixture", "broken-jacobi"]
    _, rep = report(argv)
    _, _, text = run(argv + ["--format", "text"])
    assert "result: FAIL" in text
    for subject, v in rep["verdicts"].items():
        assert f"{subject}: {'PASS' if v['passed'] else 'FAIL'}" in text
    assert "witness ('e11', 'e12', 'e21')" in text


def test_timing_is_opt_in():
    _, rep = report(["check", "lie", "--fixture", "gl11"])
    assert "elapsed_seconds" not in rep
    _, rep = report(["check", "lie", "--fixture", "gl11", "--timing"])
    assert rep["elapsed_seconds"] >= 0


def test_fixtures_command(capsys):
    assert main(["fixtures", "gl11"]) == 0
    assert json.loads(capsys.readouterr().out)["description"] == fixture("gl11").description
    assert main(["fixtures", "--list"]) == 0
    listing = capsys.readouterr().out
    assert all(name in listing for name in FIXTURES)
    assert main(["fixtures", "missing"]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "omnicolor", "check", "lie", "--fixture", "gl11",
                           "--format", "text"], capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0 and "result: PASS" in proc.stdout
