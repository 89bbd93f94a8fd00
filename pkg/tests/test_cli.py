import json

import pytest
from click.testing import CliRunner

from qcgl.cli import main, print_object


@pytest.fixture
def run():
    runner = CliRunner()

    def go(*args):
        return runner.invoke(main, list(args), catch_exceptions=False)
    return go


def test_verify_fock_example(run, tmp_path):
    out = tmp_path / "r.json"
    res = run("verify", "--module", "fock", "--max-weight", "6", "--mode-window", "3", "--out", str(out))
    assert res.exit_code == 0, res.output
    js = json.loads(out.read_text())
    assert js["summary"]["fail"] == 0 and js["summary"]["pass"] > 1000
    assert res.output.startswith("PASS")


def test_bad_resonance_config(run):
    res = run("resonance", "--k", "1", "--r", "3", "--c", "")
    assert res.exit_code == 2
    assert "gcd" in res.output


def test_series_order_too_small(run):
    res = run("verify", "--module", "vector", "--mode-window", "2", "--series-order", "3")
    assert res.exit_code == 2


def test_verify_failure_exits_1(run, monkeypatch):
    import qcgl.relations as R
    good = R.RelationConstants.generic()
    monkeypatch.setattr(R.RelationConstants, "generic",
                        classmethod(lambda cls: R.RelationConstants(good.sigma1, good.sigma2, -good.g11)))
    res = run("verify", "--module", "vector", "--entry-window", "1", "--mode-window", "1")
    assert res.exit_code == 1
    assert res.output.startswith("FAIL")


def test_macdonald_print(run):
    res = run("macdonald", "--N", "2", "--shape", "2,0", "--print")
    assert res.exit_code == 0
    lines = res.output.splitlines()
    assert lines[0] == "m[2, 0]: (1)/(1)"
    # (1+q)(1-t)/(1-qt)
    assert lines[1] == "m[1, 1]: (-1+t-q+q*t)/(-1+q*t)"


GAMMA = "(1-q1^-1*q3^-1*u/z)*(1-q1^-1*u/z)^-1*(1-q3*u/z)*(1-u/z)^-1"
FOCK_ROW = """\
e[-1] [1] -> [1, 1]: (q3^-1*u^-1-q3*u^-1)/(q3-q3^2-q1+q1*q3); [2]: (-q1^-1*u^-1)/(-1+q1)
e[0] [1] -> [1, 1]: (1-q3^2)/(q3-q3^2-q1+q1*q3); [2]: (-1)/(-1+q1)
e[1] [1] -> [1, 1]: (q3*u-q3^3*u)/(q3-q3^2-q1+q1*q3); [2]: (-q1*u)/(-1+q1)"""


@pytest.mark.parametrize("args,want", [
    (("print", "gamma"), GAMMA),
    (("print", "fock-row", "--shape", "1"), FOCK_ROW),
    (("print", "tail", "--k", "2", "--r", "2", "--c", "1"), "[0,-1,-2,-3,-4,-5]"),
])
def test_print_golden(run, args, want):
    res = run(*args)
    assert res.exit_code == 0
    assert res.output.rstrip("\n") == want


def test_print_object_matches_cli(run):
    assert print_object("tail", k=2, r=2, c="1", entries=6) == "[0,-1,-2,-3,-4,-5]"
    with pytest.raises(ValueError):
        print_object("nope")


def test_print_unknown_kind(run):
    assert run("print", "nope").exit_code == 2


def test_deterministic_reports(run, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        res = run("wn", "--N", "2", "--entry-window", "0,1", "--mode-window", "1", "--out", str(p), "--no-timing")
        assert res.exit_code == 0
    assert a.read_bytes() == b.read_bytes()


def test_numeric_qmode_same_verdict(run, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    base = ("verify", "--module", "tensor", "--N", "2", "--entry-window", "1", "--mode-window", "1", "--no-timing")
    r1 = run(*base, "--out", str(a))
    r2 = run(*base, "--qmode", "numeric:3", "--out", str(b))
    assert r1.exit_code == r2.exit_code == 0
    ja, jb = json.loads(a.read_text()), json.loads(b.read_text())
    assert [c["status"] for c in ja["cases"]] == [c["status"] for c in jb["cases"]]


def test_bad_qmode(run):
    assert run("verify", "--module", "vector", "--qmode", "fast").exit_code == 2


def test_daha_command(run):
    res = run("daha", "--N", "2", "--max-weight", "2", "--mode-window", "1", "--cocycle-weight", "2")
    assert res.exit_code == 0
    assert all(line.startswith("PASS") for line in res.output.splitlines())
