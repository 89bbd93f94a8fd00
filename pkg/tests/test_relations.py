import json

import pytest

from qcgl.coeff import ONE
from qcgl.partition import TailSpec, enumerate_nonneg, enumerate_tailed
from qcgl.relations import (CheckSpec, Report, RelationConstants, check_ee, ee_combo, ee_half, evaluate_combo,
                            run_suite)
from qcgl.reps import FockModule, ResonanceModule, TensorModule, VectorModule
from qcgl.suites import ALL_RELATIONS, RESONANCE_RELATIONS, tensor_suite, vector_suite


def test_vector_all_relations():
    rep = vector_suite(mode_window=2, entry_window=2)
    assert rep.passed, rep.failures()[:3]
    assert rep.summary["pass"] > 500


@pytest.mark.parametrize("N,limit", [(2, 9), (3, 3)])
def test_tensor_subset(N, limit):
    rep = tensor_suite(N, mode_window=1, entry_window=1, limit=limit)
    assert rep.passed, rep.failures()[:3]


def test_fock_small():
    rep = run_suite(FockModule(), enumerate_nonneg(3), 1, ALL_RELATIONS)
    assert rep.passed, rep.failures()[:3]


@pytest.mark.parametrize("spec", [TailSpec(1, 2), TailSpec(2, 2, (1,))], ids=str)
def test_resonance_small(spec):
    M = ResonanceModule(spec)
    rep = run_suite(M, enumerate_tailed(spec, 2), 1, RESONANCE_RELATIONS)
    assert rep.passed, rep.failures()[:3]


def test_ee_halves_cancel():
    T = TensorModule(2)
    C = RelationConstants.generic()
    for n, m in [(0, 1), (-1, 2)]:
        assert evaluate_combo(T, ee_combo(n, m, C), (0, 0)).is_zero()
        # on V(u) each half already vanishes, on the tensor only the sum does
        assert evaluate_combo(VectorModule(), ee_half(n, m, C), 0).is_zero()
        assert not evaluate_combo(T, ee_half(n, m, C), (0, 0)).is_zero()


def test_wrong_constants_fail():
    T = TensorModule(2)
    good = RelationConstants.generic()
    bad = RelationConstants(good.sigma1 + ONE, good.sigma2, good.g11)
    v = (0, 1)
    assert evaluate_combo(T, ee_combo(0, 0, good), v).is_zero()
    assert not evaluate_combo(T, ee_combo(0, 0, bad), v).is_zero()


def test_wrong_sign_fails(monkeypatch):
    import qcgl.relations as R
    good = R.RelationConstants.generic()
    flipped = R.RelationConstants(good.sigma1, good.sigma2, -good.g11)
    monkeypatch.setattr(R.RelationConstants, "generic", classmethod(lambda cls: flipped))
    rep = run_suite(VectorModule(), range(-1, 2), 1, ("ef",))
    assert not rep.passed


def test_numeric_mode_agrees():
    basis = enumerate_nonneg(2)
    a = run_suite(FockModule(), basis, 1, ALL_RELATIONS)
    b = run_suite(FockModule(), basis, 1, ALL_RELATIONS, numeric_seed=7)
    assert [c["status"] for c in a.cases] == [c["status"] for c in b.cases]
    assert b.params["qmode"] == "numeric:7"


def test_checkspec_validation():
    V = VectorModule()
    with pytest.raises(ValueError):
        CheckSpec(V, "nope")
    with pytest.raises(ValueError):
        CheckSpec(V, "ee", mode_window=2, series_order=3)
    assert CheckSpec(V, "ee", mode_window=2).series_order == 5


def test_report_json_schema():
    rep = check_ee(CheckSpec(VectorModule(), "ee", 1, [0]))
    js = json.loads(rep.dumps())
    assert set(js) == {"suite", "params", "cases", "summary", "seconds"}
    assert set(js["summary"]) == {"pass", "fail", "error"}
    assert all(set(c) == {"id", "status", "detail"} for c in js["cases"])
    assert js["summary"]["pass"] == len(js["cases"]) == 9


def test_report_collects_errors():
    r = Report("x")
    r.add("a", "pass")
    r.add("b", "error", "boom")
    assert not r.passed and r.failures() == [{"id": "b", "status": "error", "detail": "boom"}]

