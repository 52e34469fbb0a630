from __future__ import annotations

import json

import pytest

from macweyl import verify
from macweyl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_E_json(capsys):
    code, out, _ = run(capsys, "E", "--type", "A1", "--lambda=-1", "--sigma", "id", "--mode", "v0", "--out", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["type"] == "A1" and obj["mode"] == "v0"
    terms = {tuple(r["weight"]): r for r in obj["terms"]}
    assert set(terms) == {(-1,), (1,)}


def test_E_generic_text(capsys):
    code, out, _ = run(capsys, "E", "--type", "A2", "--lambda=-1,0", "--sigma", "s1")
    assert code == 0 and out.strip()


def test_qbg_dot(capsys):
    code, out, _ = run(capsys, "qbg", "--type", "A2", "--out", "dot")
    assert code == 0
    assert out.startswith("digraph") and "dashed" in out


def test_qbg_json(capsys):
    code, out, _ = run(capsys, "qbg", "--type", "A1", "--out", "json")
    obj = json.loads(out)
    assert code == 0
    assert sorted(e["kind"] for e in obj["edges"]) == ["bruhat", "quantum"]


def test_walks(capsys):
    code, out, _ = run(capsys, "walks", "--type", "A1", "--lambda=-2", "--filter", "qb", "--out", "json")
    assert code == 0
    assert sorted(tuple(w["J"]) for w in json.loads(out)["walks"]) == [(), (1,), (1, 2), (2,)]


def test_weyl_char(capsys):
    code, out, _ = run(capsys, "weyl-char", "--type", "A2", "--sigma", "s1s2", "--lambda=-1,-1",
                       "--global", "--order", "4", "--char", "1,1", "--out", "json")
    obj = json.loads(out)
    assert code == 0 and obj["char"] == [1, 1] and obj["global"]["order"] == 4


def test_whittaker(capsys):
    code, out, _ = run(capsys, "whittaker", "--type", "A1", "--sigma", "id", "--N", "4", "--q-order", "6")
    obj = json.loads(out)
    assert code == 0
    assert [t["q_exp"] for t in obj["terms"]] == ["0", "1/4", "1", "9/4", "4"]


def test_whittaker_scope(capsys):
    code, _, err = run(capsys, "whittaker", "--type", "C2", "--N", "1")
    assert code == 2 and "out of scope" in err


def test_check_eigen(capsys):
    code, out, _ = run(capsys, "check-eigen", "--type", "A2", "--lambda=-1,0", "--mu=1,0")
    assert code == 0 and "ok" in out


def test_verify_rr(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rr", "--type", "A1", "--M", "8")
    assert code == 0
    assert out.startswith("rr: PASS")


def test_verify_failure_prints_counterexample(capsys, monkeypatch):
    def broken(types=None):
        res = verify.SuiteResult("route")
        res.check(True, verify.Failure("x", "A1", "u", (0,), "id"))
        res.check(False, verify.Failure("walk route = operator route", "A2", "u", (-1, 0), "s1"))
        res.check(False, verify.Failure("walk route = operator route", "A1", "u", (-1,), "id"))
        return res

    monkeypatch.setitem(verify.SUITES, "route", broken)
    code, out, _ = run(capsys, "verify", "--suite", "route")
    assert code == 1
    assert "FAIL" in out
    assert "counterexample" in out and "A1" in out.split("counterexample")[1]


@pytest.mark.parametrize("argv", [
    ["E", "--type", "A2", "--lambda=-1"],
    ["E", "--type", "A1", "--lambda=x"],
    ["E", "--type", "A1", "--lambda=-1", "--sigma", "s7"],
    ["E", "--type", "B3", "--lambda=-1"],
    ["weyl-char", "--type", "A1", "--lambda=-1", "--char", "1"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2


def test_deterministic(capsys):
    argv = ["E", "--type", "A2", "--lambda=-1,1", "--sigma", "w0", "--out", "json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
