import json
import subprocess
import sys

import pytest

from bfcorr import wedge
from bfcorr.cli import main
from bfcorr.serialize import dumps


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    return _run


@pytest.fixture
def vacuum_file(tmp_path):
    path = tmp_path / "vac.json"
    path.write_text(dumps(wedge()))
    return str(path)


def test_convert_boson_to_fermion(run):
    assert run("convert", "--from", "boson", "--to", "fermion", "--expr", "z1^2") == (0, "xi[-1] + xi[0,1]\n", "")


def test_convert_symm_to_schur(run):
    assert run("convert", "--from", "symm", "--to", "symm-s", "--expr", "p2")[1] == "s(2) - s(1,1)\n"
    assert run("schur-expand", "--expr", "p2")[1] == "s(2) - s(1,1)\n"
    assert run("schur-expand", "--from", "boson", "--expr", "z1^2")[1] == "s(2) + s(1,1)\n"


def test_convert_fermion_vacuum_to_boson(run, vacuum_file):
    assert run("convert", "--from", "fermion", "--to", "boson", "--json", vacuum_file)[:2] == (0, "1\n")


@pytest.mark.parametrize(
    "target, expected",
    [
        ("boson", "z1^2"),
        ("symm-p", "p1^2"),
        ("symm-s", "s(2) + s(1,1)"),
        ("asymm", "S[-1] + S[0,1]"),
        ("fermion", "xi[-1] + xi[0,1]"),
    ],
)
def test_convert_all_targets(run, target, expected):
    assert run("convert", "--from", "boson", "--to", target, "--expr", "z1^2")[1] == expected + "\n"


def test_convert_json_output_roundtrips(run, tmp_path):
    code, out, _ = run("convert", "--from", "boson", "--to", "fermion", "--expr", "z2", "--format", "json")
    assert code == 0
    path = tmp_path / "v.json"
    path.write_text(out)
    assert run("convert", "--from", "fermion", "--to", "boson", "--json", str(path))[1] == "z2\n"


def test_convert_symm_s_document_as_symm_input(run, tmp_path):
    code, out, _ = run("schur-expand", "--expr", "p1^2", "--format", "json")
    path = tmp_path / "s.json"
    path.write_text(out)
    assert run("convert", "--from", "symm", "--to", "symm-p", "--json", str(path))[1] == "p1^2\n"


def test_fermion_expression_rejected(run):
    code, out, err = run("convert", "--from", "fermion", "--to", "boson", "--expr", "xi[]")
    assert code == 2 and "JSON" in err


def test_mixed_family_exit_2(run):
    code, out, err = run("convert", "--from", "boson", "--to", "fermion", "--expr", "z1 + p1")
    assert code == 2
    assert "byte 5" in err


def test_wrong_document_space(run, vacuum_file):
    code, _, err = run("convert", "--from", "boson", "--to", "fermion", "--json", vacuum_file)
    assert code == 2


def test_degree_cap(run):
    assert run("convert", "--from", "boson", "--to", "fermion", "--expr", "z9")[0] == 2
    assert run("convert", "--from", "boson", "--to", "symm-p", "--expr", "z9")[0] == 0
    assert run("convert", "--from", "boson", "--to", "fermion", "--expr", "z9", "--max-degree", "9")[0] == 0


def test_inner(run, vacuum_file, tmp_path):
    assert run("inner", "--space", "boson", "z1^2", "z1^2")[1] == "2\n"
    assert run("inner", "--space", "symm", "p2", "p1^2")[1] == "0\n"
    assert run("inner", "--space", "symm", "1/2*p2", "p2")[1] == "1\n"
    assert run("inner", "--space", "boson", "1/3*z1", "z1")[1] == "1/3\n"
    assert run("inner", "--space", "fermion", vacuum_file, vacuum_file)[1] == "1\n"
    other = tmp_path / "o.json"
    other.write_text(dumps(wedge(0)))
    assert run("inner", "--space", "fermion", vacuum_file, str(other))[1] == "0\n"


def test_chartable(run):
    code, out, _ = run("chartable", "1", "--format", "json")
    assert json.loads(out)["table"] == [[1]]
    doc = json.loads(run("chartable", "2", "--format", "json")[1])
    assert doc["lambdas"] == [[2], [1, 1]] and doc["mus"] == [[1, 1], [2]]
    assert doc["table"] == [[1, 1], [1, -1]]
    doc = json.loads(run("chartable", "3", "--format", "json")[1])
    assert doc["table"] == [[1, 1, 1], [2, 0, -1], [1, -1, 1]]
    text = run("chartable", "3")[1]
    assert text.splitlines()[2].split() == ["(2,1)", "2", "0", "-1"]


def test_chartable_cap(run):
    assert run("chartable", "9")[0] == 2
    assert run("chartable", "0")[0] == 2


def test_verify(run):
    code, out, _ = run("verify", "--degree", "4")
    assert code == 0 and "result: pass" in out
    code, out, _ = run("verify", "--degree", "0", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["total_pairs"] == 1 and doc["passed"]
    assert run("verify", "--degree", "9")[0] == 2


def test_verify_negative_control(run, monkeypatch):
    import bfcorr.asymm as asymm

    monkeypatch.setattr(asymm, "_basis_sign", lambda lam: -1 if lam.weight % 2 else 1)
    code, out, _ = run("verify", "--degree", "4")
    assert code == 1 and "result: FAIL" in out


def test_usage_errors_exit_2(run):
    assert run()[0] == 2
    assert run("convert", "--from", "boson")[0] == 2
    assert run("inner", "--space", "fermion", "/nonexistent.json", "/nonexistent.json")[0] == 2


def test_deterministic_output(run):
    first = run("convert", "--from", "boson", "--to", "asymm", "--expr", "(z1 + z2)^3 - 1/7*z3", "--format", "json")
    second = run("convert", "--from", "boson", "--to", "asymm", "--expr", "(z1 + z2)^3 - 1/7*z3", "--format", "json")
    assert first == second


def test_module_entry_point(vacuum_file):
    proc = subprocess.run(
        [sys.executable, "-m", "bfcorr", "convert", "--from", "boson", "--to", "fermion", "--expr", "z1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "xi[0]\n"
    proc = subprocess.run(
        [sys.executable, "-m", "bfcorr", "convert", "--from", "fermion", "--to", "asymm", "--json", "-"],
        input=dumps(wedge(-1)), capture_output=True, text=True, check=False,
    )
    assert proc.stdout == "S[-1]\n"
