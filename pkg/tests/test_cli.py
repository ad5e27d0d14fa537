import json

import pytest

from eqlr import cli
from eqlr.polyring import MPoly, Y, render_paired

EXAMPLE = ["-d", "3", "--lambda", "1,1", "--mu", "3,2", "--nu", "3,2,1"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coeff_example(capsys):
    code, out, _ = run(capsys, "coeff", *EXAMPLE)
    assert (code, out) == (0, "(y6-y1)+(y4-y2)\n")


def test_coeff_capital_flavor(capsys):
    code, out, _ = run(capsys, "coeff", *EXAMPLE, "--flavor", "Y", "-n", "6")
    assert code == 0
    want = (Y(5) - Y(1)) + (Y(6) - Y(3))
    assert out == render_paired(want) + "\n"
    code, out, _ = run(capsys, "coeff", *EXAMPLE, "--flavor", "Y", "-n", "6", "--format", "json")
    doc = json.loads(out)
    assert MPoly.from_json(doc["coefficients"][0]["poly"]["terms"]) == want


def test_capital_flavor_needs_n(capsys):
    code, _, err = run(capsys, "coeff", *EXAMPLE, "--flavor", "Y")
    assert code == 2 and "-n" in err


def test_coeff_with_empty_lambda(capsys):
    code, out, _ = run(capsys, "coeff", "-d", "3", "--lambda", "", "--mu", "3,2", "--nu", "3,2")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "coeff", "-d", "3", "--lambda", "", "--mu", "3,2")
    assert (code, out) == (0, "(3,2,0): 1\n")


def test_method_all_cross_checks(capsys):
    code, out, _ = run(capsys, "coeff", *EXAMPLE, "--method", "all", "-n", "6")
    assert (code, out) == (0, "(y6-y1)+(y4-y2)\n")


def test_cross_method_mismatch_exits_3(capsys, monkeypatch):
    real = cli._by_method

    def broken(method, req, nu):
        c, lists = real(method, req, nu)
        return (c + 1 if method == "oracle" else c), lists

    monkeypatch.setattr(cli, "_by_method", broken)
    code, _, err = run(capsys, "coeff", *EXAMPLE, "--method", "all")
    assert code == 3 and "disagree" in err


def test_shape_errors_exit_2(capsys):
    assert run(capsys, "coeff", "-d", "2", "--lambda", "1,2", "--mu", "1")[0] == 2
    assert run(capsys, "coeff", "-d", "2", "--lambda", "3", "--mu", "1", "-n", "4", "--method", "puzzles")[0] == 2
    code, _, err = run(capsys, "coeff", "-d", "2", "--lambda", "1,x", "--mu", "1")
    assert code == 2 and "part 2" in err
    assert run(capsys, "coeff", "-d", "2", "--lambda", "1", "--mu", "1", "--method", "nope")[0] == 2
    assert run(capsys, "coeff", "-d", "2", "--lambda", "1", "--mu", "1,1", "--kappa", "2")[0] == 2


def test_enumerate_example_listing(capsys):
    code, out, _ = run(capsys, "enumerate", *EXAMPLE, "--positive-only", "--format", "json")
    assert code == 0 and out.endswith("\n") and out.count("\n") == 1
    doc = json.loads(out)
    assert doc["count"] == 4
    assert sorted(item["weight"] for item in doc["items"]) == sorted(["(y6-y5)", "(y5-y3)", "(y4-y2)", "(y3-y1)"])
    code, out, _ = run(capsys, "enumerate", *EXAMPLE, "--positive-only")
    assert out.rstrip().endswith("count: 4")


def test_enumerate_puzzles(capsys):
    args = ["-d", "2", "-n", "4", "--lambda", "1,1", "--mu", "2,1", "--nu", "2,1", "--method", "puzzles"]
    code, out, _ = run(capsys, "enumerate", *args)
    assert code == 0 and out.rstrip().endswith("count: 2")
    assert "(y4-y3)(y2-y1)" in out or "(y2-y1)(y4-y3)" in out
    code, out, _ = run(capsys, "enumerate", *args, "--format", "json")
    assert json.loads(out)["count"] == 2


def test_enumerate_empty(capsys):
    code, out, _ = run(capsys, "enumerate", "-d", "2", "--lambda", "1", "--mu", "1", "--nu", "2,1")
    assert code == 0 and out.rstrip().endswith("count: 0")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "bialternant", "-d", "3", "--max-shape", "3,3,3")
    assert code == 0 and out.startswith("bialternant: pass")
    code, out, _ = run(capsys, "verify", "bijection", "-d", "2", "-n", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["failed"] == 0
    assert all({"LP+", "LR+", "LP", "LR"} <= set(c["data"]) for c in doc["cases"])
    code, out, _ = run(capsys, "verify", "positivity", "-d", "2", "--max-shape", "2,2")
    assert code == 0 and "positivity: pass" in out


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "nonsense")[0] == 2


def test_verify_failure_exits_1(capsys, monkeypatch):
    from eqlr import suites

    monkeypatch.setitem(suites.CHECKERS, "bialternant", lambda mu, d: suites.CaseResult("bialternant", "x", False, "forced"))
    code, out, _ = run(capsys, "verify", "bialternant", "-d", "1")
    assert code == 1 and "forced" in out


def test_output_is_deterministic(capsys, monkeypatch):
    args = ["coeff", "-d", "3", "--lambda", "2,1", "--mu", "2,1", "--format", "json"]
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first
    assert run(capsys, *args, "--threads", "2")[1] == first
    monkeypatch.setenv("EQLR_THREADS", "2")
    assert run(capsys, *args)[1] == first
    v = ["verify", "badguys", "-d", "2", "--max-shape", "2,2", "--format", "json"]
    one = run(capsys, *v)[1]
    assert run(capsys, *v, "--threads", "2")[1] == one


def test_skew_shapes(capsys):
    code, out, _ = run(capsys, "coeff", "-d", "2", "--lambda", "1", "--mu", "2,1", "--kappa", "1", "--method", "all")
    assert code == 0 and out


@pytest.mark.parametrize("fmt", ["text", "ascii"])
def test_text_formats(capsys, fmt):
    code, out, _ = run(capsys, "enumerate", *EXAMPLE, "--format", fmt)
    assert code == 0 and "count:" in out
    if fmt == "ascii":
        assert out.isascii()
