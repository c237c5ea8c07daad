import json

import pytest

from bestmono.cli import main, parse_n_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bound_murphy(capsys):
    code, out, _ = run(capsys, "check", "--seq", "1^5 4^2 6^2 7^3", "--bound", "murphy-alpha")
    assert code == 0 and out.strip() == "5"


def test_bound_json(capsys):
    code, out, _ = run(capsys, "check", "--seq", "1^5 4^2 6^2 7^3", "--bound", "murphy-alpha", "--json")
    data = json.loads(out)
    assert data["integer"] == 5 and data["trace"] == [1, 1, 1, 4, 7, "inf"]


def test_check_not_declared(capsys):
    code, out, _ = run(capsys, "check", "--seq", "2^5", "--cond", "ham")
    assert code == 1 and "fails (1.1) at i=2" in out


def test_check_declared(capsys):
    code, out, _ = run(capsys, "check", "--seq", "4^5", "--cond", "ham")
    assert code == 0


def test_check_json_is_deterministic(capsys):
    argv = ["check", "--seq", "3,4,4,5,5,5", "--cond", "tough", "--t", "5/3", "--json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert json.loads(first[1])["failing_clause"] == {"clause": "3.3.1", "i": 3, "j": None}


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--seq", "2^5", "--cond", "tough", "--t", "0.5"],
        ["check", "--seq", "2^5", "--cond", "nope"],
        ["check", "--seq", "1,3,3,3", "--cond", "ham"],
        ["check", "--seq", "2^5"],
        ["check", "--seq", "2^x", "--cond", "ham"],
        ["forcibly", "--seq", "3^9", "--prop", "hamiltonian", "--max-n", "8"],
        ["verify", "--cond", "ham", "--n", "x..y"],
        ["frobnicate"],
    ],
)
def test_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_forcibly(capsys):
    code, _, _ = run(capsys, "forcibly", "--seq", "2^5", "--prop", "hamiltonian")
    assert code == 0
    code, out, _ = run(capsys, "forcibly", "--seq", "1,2,2,3", "--prop", "hamiltonian", "--json")
    data = json.loads(out)
    assert code == 1 and not data["forcibly"]
    assert data["counterexample"]["n"] == 4 and len(data["counterexample"]["edges"]) == 4


def test_forcibly_with_premise(capsys):
    code, _, _ = run(capsys, "forcibly", "--seq", "1,1,2,2", "--prop", "hamiltonian", "--premise", "traceable")
    assert code == 1


def test_realize(capsys):
    code, out, _ = run(capsys, "realize", "--seq", "1,1,1,3")
    assert code == 0 and json.loads(out) == {"n": 4, "edges": [[0, 3], [1, 3], [2, 3]]}


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--cond", "ham", "--n", "7", "--clause", "1.1", "--i", "2")
    assert code == 0 and out.startswith("K2 + (E2 u K3)")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--cond", "ham", "--n", "5..7"],
        ["verify", "--cond", "alpha-le", "--k", "1", "--n", "5"],
        ["verify", "--cond", "tough", "--t", "3/2", "--n", "7"],
    ],
)
def test_verify_passes(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0 and out.strip().endswith("PASS")
    assert "PASS" in err


def test_sinks(capsys):
    code, out, _ = run(capsys, "sinks", "--prop", "hamiltonian", "--n", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["sinks"] == [[1, 2, 2, 3]] and data["count"] == 1


def test_sink_bound(capsys):
    code, out, _ = run(capsys, "sink-bound", "--k", "3", "--n", "10")
    assert code == 0 and "4^6 5^4" in out


def test_bm_sweep_holds(capsys):
    code, out, err = run(capsys, "bm-sweep", "--from", "tough:1", "--to", "ham", "--n", "3..8")
    assert code == 0 and "holds" in out
    assert "n=8" in err


def test_bm_sweep_fails_with_boundary_sequence(capsys):
    code, out, _ = run(capsys, "bm-sweep", "--from", "bindhi:1", "--to", "ham", "--n", "6..8")
    assert code == 1 and "FAILS" in out
    for seq in ["2^2 3^2 5^2", "2^2 4^3 6^2", "3^3 4^2 7^3"]:
        assert f"  {seq}\n" in out


def test_list(capsys, tmp_path):
    code, out, _ = run(capsys, "list")
    assert code == 0 and "HAM" in out
    target = tmp_path / "props.json"
    code, out, _ = run(capsys, "list", "properties", "--json", "--output", str(target))
    assert code == 0 and out == ""
    assert "hamiltonian" in json.loads(target.read_text())["properties"]


def test_parse_n_range():
    assert parse_n_range("5..7") == [5, 6, 7]
    assert parse_n_range("4") == [4]
