from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qcgl.coeff import (AT_INFINITY, AT_ZERO, CoeffSum, DivisionByZero, FactoredScalar, LaurentPoly, Monomial,
                        MultiplePoleError, ONE, ResonanceSingular, Scalar, UnsupportedResonance, ZFunction,
                        delta_residues, expand_factored, mono, parse_poly, parse_scalar, poly_arith, refactor,
                        resonance_normalize, scalar_eq, series_expand)
from qcgl.coeff.series import binomial_series

P = parse_poly


def test_poly_arith_examples():
    assert poly_arith("add", P("1-q1"), P("q1")) == ONE
    assert poly_arith("mul", P("1-q1"), P("1+q1")) == P("1-q1^2")
    assert poly_arith("neg", LaurentPoly()).is_zero()


def test_q2_is_eliminated():
    m = Monomial({"q2": 1})
    assert m == mono(q1=-1, q3=-1)
    assert "q2" not in m.to_text()


def test_text_round_trip():
    p = P("3/2*q1^-1*q3+u-2")
    assert parse_poly(p.to_text()) == p
    s = Scalar(P("1-q1"), P("1-q3"))
    assert parse_scalar(s.to_text()) == s or scalar_eq(parse_scalar(s.to_text()), s)


def test_scalar_eq_examples():
    assert scalar_eq(Scalar(P("1-q1^2"), P("1-q1")), Scalar(P("1+q1")))
    assert scalar_eq(Scalar(0, P("1-q3")), Scalar(0, P("1-q1")))
    assert not scalar_eq(Scalar(P("1-q1"), P("1-q3")), Scalar(1))


def test_expand_factored_examples():
    q1, q3 = mono(q1=1), mono(q3=1)
    assert scalar_eq(expand_factored(FactoredScalar(1, q1, [(q3, 1)])), Scalar(P("q1-q1*q3")))
    assert scalar_eq(expand_factored(FactoredScalar(1, factors=[(q1 * q3, -1)])), Scalar(1, P("1-q1*q3")))
    assert scalar_eq(expand_factored(FactoredScalar(-1)), Scalar(-1))


def test_degenerate_denominator_raises():
    f = FactoredScalar(1, factors=[(Monomial(), -1)])
    with pytest.raises(DivisionByZero):
        expand_factored(f)


def test_series_expand_examples():
    s = mono(s=1)
    q2 = mono(q1=-1, q3=-1)
    f = FactoredScalar(1, factors=[(q2 * s, 1), (s, -1)])
    out = series_expand(f, "s", AT_INFINITY, 2)
    one_minus_q2 = ONE - LaurentPoly.monomial(q2)
    assert list(out.coeffs) == [ONE, one_minus_q2, one_minus_q2]
    g = FactoredScalar(1, q2, [(q2.inverse() * s.inverse(), 1), (s.inverse(), -1)])
    out = series_expand(g, "s", AT_ZERO, 1)
    assert list(out.coeffs) == [LaurentPoly.monomial(q2), LaurentPoly.monomial(q2) - ONE]
    assert list(series_expand(FactoredScalar(1, factors=[(q2 * s, 1)]), "s", AT_INFINITY, 0).coeffs) == [ONE]


def test_delta_residue_examples(u):
    # z/(z-u) = 1/(1-u/z)
    assert [(a, r.to_scalar()) for a, r in delta_residues(ZFunction([(u, -1)]))] == [(u, Scalar(1))]
    assert delta_residues(ZFunction()) == []
    with pytest.raises(MultiplePoleError):
        delta_residues(ZFunction([(u, -2)]))


def test_gamma_residues_match_series(u):
    from qcgl.reps.vector import gamma_fn
    from qcgl.suites import sp_identity
    g = gamma_fn(0, u)
    poles = sorted(a.to_text() for a, _ in delta_residues(g))
    assert poles == sorted([u.to_text(), (mono(q1=-1) * u).to_text()])
    assert sp_identity(g, 6)


def test_sp_identity_detects_wrong_residue(u):
    from qcgl.suites import sp_identity
    import qcgl.suites as S
    f = ZFunction([(u, -1), (mono(q1=1) * u, -1), (mono(q3=1) * u, 1)])
    assert sp_identity(f)
    original = S.delta_residues
    try:
        S.delta_residues = lambda g: [(a, r * FactoredScalar(2)) for a, r in original(g)]
        assert not sp_identity(f)
    finally:
        S.delta_residues = original


def test_resonance_normalize_examples():
    k, r = 1, 2
    x = mono(q1=1 - r, q3=k + 1)
    assert scalar_eq(resonance_normalize(FactoredScalar(1, factors=[(x, 1), (x, -1)]), k, r), Scalar(1))
    assert resonance_normalize(FactoredScalar(1, factors=[(x, 1)]), k, r).num.is_zero()
    assert scalar_eq(resonance_normalize(FactoredScalar(1, factors=[(x ** 2, 1), (x, -1)]), k, r), Scalar(2))
    with pytest.raises(ResonanceSingular):
        resonance_normalize(FactoredScalar(1, factors=[(x, -1)]), k, r)
    with pytest.raises(UnsupportedResonance):
        resonance_normalize(FactoredScalar(1), 1, 3)


def test_coeffsum_zero_test():
    q1, q3 = mono(q1=1), mono(q3=1)
    # (1-q1^2)/(1-q1) - (1+q1) = 0
    s = CoeffSum.of(FactoredScalar(1, factors=[(q1 ** 2, 1), (q1, -1)]))
    s.add_term(FactoredScalar(-1), P("1+q1"))
    assert s.is_zero()
    s.add_term(FactoredScalar(1, factors=[(q3, -1)]))
    assert not s.is_zero()
    t = CoeffSum.of(FactoredScalar(1, factors=[(q1, 1), (q3, -1)]))
    t.add_term(FactoredScalar(-1, factors=[(q1, 1), (q3, -1)]))
    assert t.is_zero()


# -- properties ---------------------------------------------------------------------

small_mono = st.builds(lambda a, b, c: mono(q1=a, q3=b, u=c), st.integers(-2, 2), st.integers(-2, 2),
                       st.integers(0, 1)).filter(lambda m: not m.is_one())
factor_lists = st.lists(st.tuples(small_mono, st.sampled_from([1, -1, 2])), max_size=4)


@st.composite
def factored(draw):
    return FactoredScalar(draw(st.sampled_from([1, -1, Fraction(1, 2), 3])), draw(small_mono), draw(factor_lists))


@settings(max_examples=200)
@given(factored(), factored(), factored())
def test_scalar_eq_is_an_equivalence(a, b, c):
    sa, sb, sc = (expand_factored(x) for x in (a, b, c))
    assert scalar_eq(sa, sa)
    assert scalar_eq(sa, sb) == scalar_eq(sb, sa)
    if scalar_eq(sa, sb) and scalar_eq(sb, sc):
        assert scalar_eq(sa, sc)
    same = expand_factored(a * FactoredScalar(1, factors=[(mono(q1=3), 1), (mono(q1=3), -1)]))
    assert scalar_eq(sa, same)


@given(st.lists(st.tuples(small_mono, st.sampled_from([1, -1])), min_size=1, max_size=4))
def test_refactor_inverts_expand(fac):
    f = FactoredScalar(1, factors=fac)
    assert scalar_eq(expand_factored(refactor(expand_factored(f))), expand_factored(f))


@given(factored(), st.sampled_from([(1, 2), (2, 2), (2, 3)]))
def test_resonance_matches_plain_substitution(f, kr):
    k, r = kr
    from qcgl.coeff import resonance_map
    from qcgl.coeff.resonance import zero_factor_order
    if any(zero_factor_order(a, k, r) for a, _ in f.factors):
        return
    mp = resonance_map(k, r)
    plain = expand_factored(f)
    sub = Scalar(plain.num.subs(mp), plain.den.subs(mp))
    assert scalar_eq(resonance_normalize(f, k, r), sub)


@given(small_mono, st.integers(-3, 3), st.integers(0, 6))
def test_series_product_matches_binomial_series(m, e, order):
    from qcgl.coeff.series import expand_product
    assert expand_product([(m, e)], order) == binomial_series(m, e, order)


@given(st.integers(0, 10_000))
def test_series_minus_residues(seed):
    import random
    from qcgl.suites import random_zfunction, sp_identity
    assert sp_identity(random_zfunction(random.Random(seed)), 6)
