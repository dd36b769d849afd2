import json
import os
import subprocess
import sys

import pytest

from brauer_ar.cli import main
from brauer_ar.fixtures import fixture_text


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def g4_file(tmp_path):
    p = tmp_path / "G4.bg"
    p.write_text(fixture_text("G4"))
    return str(p)


def test_classify_g4(capsys, g4_file):
    code, out, _ = run(capsys, "classify", g4_file)
    d = json.loads(out)
    assert code == 0
    assert d["rep_type"] == "Domestic(2)"
    assert d["euclidean"]["p"] == 3 and d["euclidean"]["q"] == 5
    assert "reason" not in d


def test_classify_explain(capsys):
    code, out, _ = run(capsys, "classify", "G3", "--explain")
    assert code == 0 and "reason" in json.loads(out)


def test_walks_double_g2(capsys):
    code, out, _ = run(capsys, "walks", "G2", "--flavor", "double")
    d = json.loads(out)
    assert code == 0 and d["lengths"] == [8, 8] and len(d["walks"]) == 2


def test_walks_text(capsys):
    code, out, _ = run(capsys, "walks", "G4", "--flavor", "double", "--format", "text")
    assert code == 0
    assert out.strip().splitlines()[-1] == "lengths: 3 3 5 5"


def test_validate_broken_file(capsys, tmp_path):
    p = tmp_path / "broken.bg"
    p.write_text("vertex a 1\nedge x a b\n")
    code, out, err = run(capsys, "validate", str(p))
    assert code == 1 and "unknown vertex" in err and out == ""


def test_validate_ok(capsys, g4_file):
    code, out, _ = run(capsys, "validate", g4_file)
    d = json.loads(out)
    assert code == 0 and d["valid"] and d["edges"] == 8


def test_unreadable_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.bg"))
    assert code == 2 and "cannot read" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "classify", "G4", "--bogus")[0] == 2
    assert run(capsys)[0] == 2


def test_quiver_formats(capsys):
    code, out, _ = run(capsys, "quiver", "G3", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "quiver", "G3")
    assert len(json.loads(out)["arrows"]) == 13
    code, out, _ = run(capsys, "quiver", "G1", "--format", "text")
    assert "u#0: x -> x" in out


def test_component(capsys):
    code, out, _ = run(capsys, "component", "G4", "--seed", "ε(o2)", "--radius", "3")
    d = json.loads(out)
    assert code == 0 and d["verdict"]["verdict"] == "Tube(5)"
    code, out, _ = run(capsys, "component", "G3", "--seed", "u2#0^-1", "--radius", "2",
                       "--format", "dot", "--with-projectives")
    assert code == 0 and "style=dashed" in out


def test_component_bad_seed(capsys):
    code, _, err = run(capsys, "component", "G3", "--seed", "u4#0,u4#0")
    assert code == 1 and "not a string" in err


def test_locate(capsys):
    code, out, _ = run(capsys, "locate", "G3", "--edge", "y5", "--verify")
    d = json.loads(out)
    assert code == 0 and d["simple"] == "ExceptionalTube" and d["same_tube"] is True
    assert d["evidence"]["simple"]["mouth_reached"]
    code, out, _ = run(capsys, "locate", "G3", "--edge", "y2")
    assert json.loads(out)["simple"] == "NonTube"
    code, _, err = run(capsys, "locate", "G2", "--edge", "1")
    assert code == 1 and "Brauer tree" in err


def test_same_component(capsys):
    code, out, _ = run(capsys, "same-component", "G4", "c1", "c2")
    d = json.loads(out)
    assert code == 0 and d["same_component"] is True and d["path"][0] == "c1"
    code, out, _ = run(capsys, "same-component", "G3", "y2", "y4")
    assert json.loads(out)["same_component"] is False


def test_oracle_verify(capsys):
    code, out, _ = run(capsys, "oracle-verify", "G4", "--max-len", "8")
    assert code == 0 and json.loads(out)["ok"]


def test_oracle_sweep_small(capsys):
    code, out, _ = run(capsys, "oracle-sweep", "--edges", "2", "--mult", "2", "--max-len", "8")
    d = json.loads(out)
    assert code == 0 and d["graphs"] == 22 and d["failed"] == 0


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "brauer_ar.cli", "component", "G3", "--seed", "ε(y1)", "--radius", "4"]
    env = dict(os.environ)
    a = subprocess.run(cmd, capture_output=True, check=True, env=env | {"PYTHONHASHSEED": "1"}).stdout
    b = subprocess.run(cmd, capture_output=True, check=True, env=env | {"PYTHONHASHSEED": "2"}).stdout
    assert a == b and a
