import json
import subprocess
import sys
from pathlib import Path

import pytest

from contactlie.cli import parse_vectors, run

DATA = Path(__file__).resolve().parent.parent / "data"
HEIS = str(DATA / "heis3.json")
SL2 = str(DATA / "sl2.json")


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poisson(capsys):
    code, out, _ = call(capsys, "contact", "--n", "1", "poisson", "x1", "x2")
    assert code == 0 and out.strip() == "1"


def test_contact_ops(capsys):
    assert call(capsys, "contact", "--n", "1", "ham", "x1")[1].strip() == "-x1*Dx0 + Dx2"
    assert call(capsys, "contact", "--n", "1", "hat", "x0")[1].strip() == "x0*Dx0 + x1*Dx1"
    assert "transformation" in call(capsys, "contact", "--n", "1", "class", "x0*Dx0 + x1*Dx1")[1]
    assert call(capsys, "contact", "--n", "1", "deltamu", "x1*Dx1")[1].strip() == "Dx1^Dx2"
    assert call(capsys, "contact", "--n", "1", "iso", "Dx1^(Dx2 - x1*Dx0)")[1].strip() == "dx1^dx2"
    code, out, _ = call(capsys, "contact", "--n", "1", "jacobiator", "x0", "x1", "x2")
    assert code == 0 and "jacobiator: 1" in out


def test_charclass(capsys):
    code, out, _ = call(capsys, "lie", "--file", HEIS, "charclass", "--ideal", "0,0,1")
    assert code == 0
    assert "class coordinates: [-1]" in out
    assert "nonzero: yes" in out


def test_lie_json(capsys):
    code, out, _ = call(capsys, "--json", "lie", "--file", SL2, "cohomology", "--k", "3")
    assert code == 0 and json.loads(out)["dim"] == 1
    code, out, _ = call(capsys, "lie", "--file", HEIS, "homology", "--ideal", "(0,0,1)", "--k", "1", "--json")
    assert json.loads(out)["dim"] == 1
    code, out, _ = call(capsys, "lie", "--file", HEIS, "curvature", "--ideal", "0,0,1", "--json")
    data = json.loads(out)
    assert data["curvature"] == {"0,1": ["-1"]} and data["kernel_is_subalgebra"] is False
    assert call(capsys, "lie", "--file", SL2, "validate")[0] == 0


def test_curvature_projection_file(capsys, tmp_path):
    proj = tmp_path / "alpha.json"
    proj.write_text(json.dumps([["0", "0", "0"], ["0", "0", "0"], ["1", "0", "1"]]))
    code, out, _ = call(capsys, "lie", "--file", HEIS, "curvature", "--ideal", "0,0,1", "--projection", str(proj))
    assert code == 0 and "zero: no" in out
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]))
    assert call(capsys, "lie", "--file", HEIS, "curvature", "--ideal", "0,0,1", "--projection", str(bad))[0] == 2


def test_preq(capsys):
    code, out, _ = call(capsys, "preq", "--n", "1", "--h", "1", "defect", "x1", "x2")
    assert code == 0 and "zero: yes" in out
    code, out, _ = call(capsys, "preq", "--n", "1", "--h", "2", "--normalization", "times-ih", "lift", "x2")
    assert code == 0 and "on weight 2" in out


def test_input_errors(capsys):
    code, _, err = call(capsys, "contact", "--n", "1", "ham", "dx1 ^ Dx2")
    assert code == 2 and "position 4" in err
    assert call(capsys, "contact", "--n", "1", "poisson", "x1")[0] == 2
    assert call(capsys, "contact", "--n", "1", "poisson", "x1", "x5")[0] == 2
    assert call(capsys, "lie", "--file", HEIS, "charclass", "--ideal", "1,0,0")[0] == 2
    assert call(capsys, "lie", "--file", HEIS, "charclass", "--ideal", "1,0")[0] == 2
    assert call(capsys, "lie", "--file", "/nonexistent.json", "validate")[0] == 2
    assert call(capsys, "preq", "--n", "1", "--h", "0", "lift", "x1")[0] == 2
    assert call(capsys, "preq", "--n", "1", "--h", "1", "lift", "x0")[0] == 2
    assert call(capsys, "nonsense")[0] == 2


def test_parse_vectors():
    assert parse_vectors("0,0,1", 3) == [[0, 0, 1]]
    assert parse_vectors("1,0,0;0,1/2,0", 3) == [[1, 0, 0], [0, 0.5, 0]]
    assert parse_vectors("(1,0,0),(0,1,0)", 3) == [[1, 0, 0], [0, 1, 0]]


def test_verify_all(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "all", "--seed", "42", "--n", "1", "--max-degree", "3")
    assert code == 0
    assert "all identities hold" in out
    assert "[PASS] coeff: parser round-trip" in out


def test_verify_deterministic(capsys):
    a = call(capsys, "--json", "verify", "--suite", "contact", "--seed", "5", "--samples", "10")[1]
    b = call(capsys, "--json", "verify", "--suite", "contact", "--seed", "5", "--samples", "10")[1]
    assert a == b


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "contactlie", "contact", "--n", "1", "poisson", "x1", "x2"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and res.stdout.strip() == "1"
