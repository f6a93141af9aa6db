"""CLI surface: flags, output shapes, exit codes, method agreement."""

import json
from pathlib import Path

from qlab.cli import main

FIXTURES = str(Path(__file__).resolve().parent.parent / "fixtures" / "dissections.qx")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "f2/f1^2", "--order", "6")
    assert code == 0 and out.strip() == "1 2 4 8 14 24"
    code, out, _ = run(capsys, "expand", "q", "--order", "3")
    assert code == 0 and out.strip() == "0 1 0"
    code, out, _ = run(capsys, "expand", "f1*f6/(f2^2*f3)", "--order", "9")
    assert code == 0 and out.strip() == "1 -1 1 -1 2 -3 4 -5 7"


def test_expand_mod_json_csv(capsys):
    code, out, _ = run(capsys, "expand", "f2/f1^2", "--order", "5", "--mod", "4")
    assert code == 0 and out.strip() == "1 2 0 0 2"
    code, out, _ = run(capsys, "expand", "prefA", "--order", "4", "--format", "json")
    blob = json.loads(out)
    assert blob["coeffs"] == ["1", "-1", "1", "-1"]
    code, out, _ = run(capsys, "expand", "q^2", "--order", "3", "--format", "csv")
    assert out.splitlines()[0] == "n,coeff" and out.splitlines()[3] == "2,1"


def test_expand_errors(capsys):
    code, _, err = run(capsys, "expand", "q^", "--order", "3")
    assert code == 2 and "offset" in err
    code, _, err = run(capsys, "expand", "1/q", "--order", "3")
    assert code == 2 and "valuation" in err
    code, _, err = run(capsys, "expand", "f1", "--order", "0")
    assert code == 2


def test_modd(capsys):
    code, out, _ = run(capsys, "modd", "-a", "-2", "-t", "1", "-n", "9")
    assert code == 0 and out.strip() == "13"
    code, out, _ = run(capsys, "modd", "-a", "0", "-t", "1", "-n", "13")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "modd", "-a", "1", "-t", "2", "-n", "4", "--method", "all")
    assert code == 0 and out.strip() == "1 1 1"
    # a outside the closed forms falls back to the dynamic program
    code, out, _ = run(capsys, "modd", "-a", "-1", "-t", "1", "-n", "5")
    assert code == 0
    code, _, err = run(capsys, "modd", "-a", "-1", "-t", "1", "-n", "5",
                       "--method", "explicit")
    assert code == 2 and "a=-1" in err


def test_modd_method_agreement(capsys):
    for a in (-2, 0, 1):
        for t in (1, 2, 3):
            for n in range(t * t, 61, 7):
                code, out, _ = run(capsys, "modd", "-a", str(a), "-t", str(t),
                                   "-n", str(n), "--method", "all")
                assert code == 0
                vals = out.split()
                assert len(set(vals)) == 1, (a, t, n, vals)


def test_verify_single_family(capsys):
    code, out, err = run(capsys, "verify", "--family", "vm2A-3", "--profile", "quick")
    assert code == 0
    blob = json.loads(out.strip())
    assert blob["id"] == "vm2A-3" and blob["status"] == "pass"
    assert "1/1 families pass" in err


def test_verify_custom_budget_and_j(capsys):
    code, out, _ = run(capsys, "verify", "--family", "v1-1", "--budget", "3000",
                       "--j", "0", "2")
    assert code == 0
    blob = json.loads(out.strip())
    assert blob["ranges"]["J"] == [0, 2]


def test_verify_unknown_family(capsys):
    code, _, err = run(capsys, "verify", "--family", "nonexistent")
    assert code == 2 and "nonexistent" in err


def test_lemmas(capsys):
    code, out, _ = run(capsys, "lemmas", FIXTURES, "--order", "400")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "16/16 pass"
    assert sum(1 for line in lines if line.startswith("PASS")) == 16
    code, _, err = run(capsys, "lemmas", "no/such/file.qx")
    assert code == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--seq", "prefA", "--n", "0..23", "--mod", "2")
    assert code == 0
    rows = dict(line.split(",") for line in out.strip().splitlines()[1:])
    assert rows["13"] == "0"
    assert rows["0"] == "1"
    code, out, _ = run(capsys, "table", "--seq", "overp", "--n", "0..5")
    assert out.strip().splitlines()[1:] == ["0,1", "1,2", "2,4", "3,8", "4,14", "5,24"]
    code, out, _ = run(capsys, "table", "--seq", "modd", "-a", "-2", "-t", "1",
                       "--n", "1..9")
    assert out.strip().splitlines()[-1] == "9,13"
    code, _, err = run(capsys, "table", "--seq", "modd", "--n", "1..4")
    assert code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    import dataclasses
    from qlab import congruences as cong

    broken = dataclasses.replace(cong.lookup("vm2A-3"), modulus=16)
    monkeypatch.setitem(cong._BY_ID, "vm2A-3-broken", broken)
    code, out, err = run(capsys, "verify", "--family", "vm2A-3-broken",
                         "--budget", "2000")
    assert code == 1
    blob = json.loads(out.strip())
    assert blob["status"] == "fail" and blob["counterexample"] is not None
