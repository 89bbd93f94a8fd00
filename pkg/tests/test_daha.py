import pytest

from qcgl.coeff import LaurentPoly, Scalar, mono
from qcgl.daha import (GENERATORS, c_ratio, check_cocycles, check_identification, check_mode_recursion,
                       check_reconstruction, cocycle_check, cocycle_pairs, identification_cases,
                       recursion_signs)
from qcgl.partition import enumerate_nonneg
from qcgl.reps import FockModule, VectorModule, WNModule


def test_identification_e0_n2():
    rep = check_identification(2, 4, ("e0",))
    assert rep.passed and rep.summary["pass"] > 10


def test_identification_psi_plus_n3():
    rep = check_identification(3, 3, ("psi+1",))
    assert rep.passed and rep.summary["pass"] == len(enumerate_nonneg(3, max_len=3))


def test_identification_f0_n2():
    rep = check_identification(2, 4, ("f0",))
    assert rep.passed


@pytest.mark.parametrize("g", GENERATORS)
def test_identification_all_generators_n3(g):
    assert check_identification(3, 2, (g,)).passed


def test_identification_detects_wrong_scale():
    cases = identification_cases(2, 1, ("e0",))
    assert any(c.lhs != 0 for c in cases)
    doubled = [c.lhs * 2 == c.rhs for c in cases if c.rhs != 0]
    assert doubled and not any(doubled)


def test_unknown_generator():
    with pytest.raises(ValueError):
        identification_cases(2, 1, ("h1",))


def test_recursion_on_vector():
    rep = check_mode_recursion(VectorModule(), range(-2, 3), mode_window=2)
    assert rep.passed and rep.summary["pass"] == 5 * 2 * 2 * 5


def test_recursion_on_fock():
    rep = check_mode_recursion(FockModule(), enumerate_nonneg(3), mode_window=1)
    assert rep.passed


def test_recursion_literal_signs_fail():
    assert recursion_signs(True) != recursion_signs(False)
    rep = check_mode_recursion(VectorModule(), range(-1, 2), mode_window=1, literal=True)
    bad = [c["id"] for c in rep.cases if c["status"] == "fail"]
    assert bad and all(c.startswith("[psi-") for c in bad)


@pytest.mark.parametrize("m", [-2, -1, 0, 1, 2])
def test_reconstruction_on_vector(m):
    V = VectorModule()
    for i in (-1, 0, 2):
        assert check_reconstruction(V, i, m)


def test_reconstruction_on_wn():
    W = WNModule(2)
    assert check_reconstruction(W, (1, 0), 1)
    assert check_reconstruction(W, (1, 0), -1)


def test_c_ratio_first_box():
    v = c_ratio((), 1).value.to_scalar()
    assert v == Scalar(LaurentPoly.monomial(mono()) - LaurentPoly.monomial(mono(q1=1, q3=1)))


def test_c_ratio_rejects_non_partition():
    with pytest.raises(ValueError):
        c_ratio((), 2)
    with pytest.raises(ValueError):
        c_ratio((1, 1), 2)


def test_cocycle_examples():
    assert cocycle_check((1,), 1, 2)
    # from the empty partition the second row can only be filled after the first
    assert (1, 2) not in cocycle_pairs(())
    assert cocycle_pairs(()) == []
    assert cocycle_pairs((1,)) == [(1, 2)]


def test_cocycles_small():
    rep = check_cocycles(4)
    assert rep.passed and rep.summary["pass"] > 10
