"""Specialization to the resonance locus q1^(1-r) q3^(k+1) = 1.

The locus is parametrized by q1 = p^(k+1), q3 = p^(r-1).  When
gcd(k+1, r-1) = 1 this is faithful: q1^a q3^b = 1 exactly when
(a, b) = alpha * (1-r, k+1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict

from .factored import CoeffSum, FactoredScalar
from .poly import LaurentPoly, Monomial
from .scalar import Scalar


class UnsupportedResonance(ValueError):
    """(k, r) with gcd(k+1, r-1) != 1; the exponent map is not faithful."""


class ResonanceSingular(ZeroDivisionError):
    """More vanishing factors in the denominator than in the numerator."""


def check_pair(k: int, r: int) -> None:
    if k < 1 or r < 2:
        raise UnsupportedResonance(f"need k >= 1 and r >= 2, got k={k}, r={r}")
    if gcd(k + 1, r - 1) != 1:
        raise UnsupportedResonance(f"gcd(k+1, r-1) = gcd({k + 1}, {r - 1}) != 1")


@lru_cache(maxsize=None)
def resonance_map(k: int, r: int) -> Dict[str, Monomial]:
    check_pair(k, r)
    return {"q1": Monomial.var("p", k + 1), "q3": Monomial.var("p", r - 1)}


def zero_factor_order(a: Monomial, k: int, r: int):
    """alpha if ``a`` = (q1^(1-r) q3^(k+1))^alpha, else None."""
    d = a.as_dict()
    if set(d) - {"q1", "q3"}:
        return None
    x, y = d.get("q1", 0), d.get("q3", 0)
    if x * (k + 1) + y * (r - 1) != 0:
        return None
    return Fraction(y, k + 1)


def resonance_factored(f: FactoredScalar, k: int, r: int) -> FactoredScalar:
    """Cancel vanishing factors in pairs, then map to Q(p, u, ...).

    Each vanishing factor (1 - x^alpha), x = q1^(1-r) q3^(k+1), behaves like
    alpha * (1 - x) near the locus, so a balanced set of them contributes the
    ratio of the alphas.
    """
    mapping = resonance_map(k, r)
    if f.zero_order > 0 or f.coef == 0:
        return FactoredScalar(0)
    if f.zero_order < 0:
        raise ResonanceSingular("degenerate factor (1 - 1) in denominator")
    ratio = Fraction(1)
    balance = 0
    rest = []
    for a, e in f.factors:
        alpha = zero_factor_order(a, k, r)
        if alpha is None:
            rest.append((a.subs(mapping), e))
        else:
            balance += e
            ratio *= alpha ** e
    if balance > 0:
        return FactoredScalar(0)
    if balance < 0:
        raise ResonanceSingular(f"{-balance} unmatched vanishing factor(s) in the denominator")
    out = FactoredScalar(Fraction(f.coef) * ratio, f.mono.subs(mapping), rest)
    if out.zero_order < 0:
        raise ResonanceSingular("denominator vanishes after specialization")
    return out


def resonance_normalize(f: FactoredScalar, k: int, r: int) -> Scalar:
    return resonance_factored(f, k, r).to_scalar()


def specialize_poly(p: LaurentPoly, k: int, r: int) -> LaurentPoly:
    return p.subs(resonance_map(k, r))


def specialize_sum(s: CoeffSum, k: int, r: int) -> CoeffSum:
    out = CoeffSum()
    for f, p in s.items():
        out.add_term(resonance_factored(f, k, r), specialize_poly(p, k, r))
    return out
