import itertools
import json

import pytest
from hypothesis import given, strategies as st

from qcgl.partition import (TailSpec, TailedPartition, all_tail_specs, dominance_leq, enumerate_basis,
                            is_admissible, label_from_json, label_to_json, tail_value)


def test_admissible_examples():
    assert is_admissible((2, 0), 1, 2)
    assert not is_admissible((1, 0), 1, 2)
    for k, r in ((1, 2), (2, 2), (2, 3), (3, 4)):
        for spec in all_tail_specs(k, r):
            assert is_admissible(TailedPartition(spec.head(1), spec), k, r)


def test_admissibility_is_not_monotone():
    # adding a box can create admissibility, so removing one need not keep it
    assert is_admissible((2, 0), 1, 2)
    assert not is_admissible((1, 0), 1, 2)
    assert is_admissible((3, 1), 1, 2) and not is_admissible((3, 2), 1, 2)


def test_tail_value_examples():
    assert TailSpec(1, 2).head(4) == (0, -2, -4, -6)
    assert TailSpec(2, 2, (1,)).head(5) == (0, -1, -2, -3, -4)
    for spec in all_tail_specs(2, 3):
        assert tail_value(spec, 1) == 0


def test_tailspec_validation():
    with pytest.raises(ValueError):
        TailSpec(2, 2, (3,))
    with pytest.raises(ValueError):
        TailSpec(3, 2, (1, 0))
    with pytest.raises(ValueError):
        TailSpec(2, 2, ())


@pytest.mark.parametrize("k,r", [(k, r) for k in (1, 2, 3) for r in (2, 3, 4)])
def test_tail_is_periodic(k, r):
    for spec in all_tail_specs(k, r):
        vals = [tail_value(spec, j) for j in range(1, 51 + k)]
        assert all(a >= b for a, b in zip(vals, vals[1:]))
        assert all(vals[j] - vals[j + k] == r for j in range(50))


def test_dominance_examples():
    assert dominance_leq((1, 1), (2, 0))
    assert dominance_leq((2, 1), (2, 1))
    assert not dominance_leq((3, 0), (2, 1))


def test_enumerate_examples():
    assert enumerate_basis("nonneg", weight=3) == [(3,), (2, 1), (1, 1, 1)]
    assert enumerate_basis("zvalued", N=2, lo=0, hi=1) == [(0, 0), (1, 0), (1, 1)]
    spec = TailSpec(1, 2)
    got = enumerate_basis("tailed", spec=spec, max_excess=1)
    lam0 = TailedPartition((0,), spec)
    assert got == [lam0, lam0.shifted(1, 1)]


def test_enumeration_is_duplicate_free_and_complete():
    labels = enumerate_basis("zvalued", N=3, lo=-2, hi=3)
    assert len(labels) == len(set(labels))
    brute = {t for t in itertools.product(range(-2, 4), repeat=3) if t[0] >= t[1] >= t[2]}
    assert set(labels) == brute


def test_tailed_enumeration_closed_under_one_box():
    spec = TailSpec(2, 3, (1,))
    small = set(enumerate_basis("tailed", spec=spec, max_excess=2))
    big = set(enumerate_basis("tailed", spec=spec, max_excess=3))
    for lam in small:
        for i in range(1, lam.stab + 3):
            mu = lam.shifted(i, 1)
            if is_admissible(mu, 2, 3) and mu.is_weakly_decreasing():
                assert mu in big


def test_json_round_trip():
    spec = TailSpec(2, 2, (1,))
    lam = TailedPartition((2, -1), spec)
    obj = label_to_json(lam)
    assert obj == {"prefix": list(lam.prefix), "k": 2, "r": 2, "c": [1]}
    assert label_from_json(json.loads(json.dumps(obj))) == lam
    assert label_from_json([3, 1, 1]) == (3, 1, 1)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_dominance_is_reflexive_and_antisymmetric(parts):
    lam = tuple(sorted(parts, reverse=True))
    assert dominance_leq(lam, lam)
    mu = tuple(sorted((sum(lam),) + (0,) * (len(lam) - 1), reverse=True))
    if mu != lam:
        assert dominance_leq(lam, mu) and not dominance_leq(mu, lam)
