"""Formal expansions of binomial-product rational functions and their residues.

Every generating-series coefficient in this package is an expansion of a
function ``c * z^k * prod (1 - a/z)^e`` at ``z = infinity`` (a series in
``z^-1``) or at ``z = 0`` (a series in ``z``).  Both expansions have Laurent
polynomial coefficients, so no division is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Tuple

from .factored import FactoredScalar
from .poly import ONE, ONE_MONO, LaurentPoly, Monomial, Rational, ZERO


class MultiplePoleError(ValueError):
    """The function has a pole of order greater than one."""


class SingularExpansion(ValueError):
    """The function is not regular at the requested expansion point."""


AT_INFINITY = "at-infinity"
AT_ZERO = "at-zero"


@dataclass(frozen=True)
class SeriesTrunc:
    """coeffs[m] multiplies t^m, t = slot (at-infinity) or slot^-1 (at-zero)."""

    direction: str
    order: int
    coeffs: Tuple[LaurentPoly, ...]


def expand_product(factors: Iterable[Tuple[Monomial, int]], order: int) -> List[LaurentPoly]:
    """Coefficients of t^0..t^order in prod (1 - c t)^e."""
    s: List[LaurentPoly] = [ONE] + [ZERO] * order
    for c, e in factors:
        if e > 0:
            for _ in range(e):
                s = [s[0]] + [s[j] - s[j - 1] * c for j in range(1, order + 1)]
        else:
            for _ in range(-e):
                out = [s[0]]
                for j in range(1, order + 1):
                    out.append(s[j] + out[j - 1] * c)
                s = out
    return s


def binomial_series(c: Monomial, e: int, order: int) -> List[LaurentPoly]:
    """(1 - c t)^e expanded; used as an independent reference in tests."""
    if e >= 0:
        return [LaurentPoly.monomial(c ** j, comb(e, j) * (-1) ** j) if j <= e else ZERO
                for j in range(order + 1)]
    n = -e
    return [LaurentPoly.monomial(c ** j, comb(n + j - 1, j)) for j in range(order + 1)]


def series_expand(f: FactoredScalar, slot: str, direction: str, order: int) -> SeriesTrunc:
    """Expand a factored function of one formal slot variable.

    Factor arguments must be ``(monomial) * slot^(+-1)`` or free of the slot.
    ``at-infinity`` expands in powers of ``slot``, ``at-zero`` in ``slot^-1``.
    """
    if f.zero_order < 0:
        raise SingularExpansion("degenerate denominator")
    if f.is_zero():
        return SeriesTrunc(direction, order, tuple([ZERO] * (order + 1)))
    sign = 1 if direction == AT_INFINITY else -1
    pre = FactoredScalar(f.coef, f.mono)
    pending: List[Tuple[Monomial, int]] = []
    const: List[Tuple[Monomial, int]] = []
    for a, e in f.factors:
        d = a.exponent(slot)
        if d == 0:
            const.append((a, e))
            continue
        if abs(d) != 1:
            raise ValueError(f"argument {a.to_text()} is not linear in {slot}")
        c = a * Monomial.var(slot, -d)
        if d == sign:
            pending.append((c, e))
        else:
            # (1 - c x^-1) = -c x^-1 (1 - c^-1 x) with x the expansion variable
            pre = pre * FactoredScalar((-1) ** (e & 1), a ** e)
            pending.append((c.inverse(), e))
    if pre.mono.exponent(slot) != 0:
        raise SingularExpansion(f"function is not regular at {direction}")
    if const:
        raise ValueError("slot-free binomial factors must be expanded by the caller")
    head = LaurentPoly.monomial(pre.mono, pre.coef)
    coeffs = tuple(head * p for p in expand_product(pending, order))
    return SeriesTrunc(direction, order, coeffs)


class ZFunction:
    """``coef * mono * z^zpow * prod (1 - a/z)^e`` with ``a`` free of ``z``."""

    __slots__ = ("coef", "mono", "zpow", "factors")

    def __init__(self, factors: Iterable[Tuple[Monomial, int]] = (), coef: Rational = 1,
                 mono: Monomial = ONE_MONO, zpow: int = 0):
        d: Dict[Monomial, int] = {}
        for a, e in factors:
            if e:
                d[a] = d.get(a, 0) + e
        self.factors = tuple(sorted(((a, e) for a, e in d.items() if e), key=lambda p: p[0].key))
        self.coef = coef
        self.mono = mono
        self.zpow = zpow

    def __mul__(self, other: "ZFunction") -> "ZFunction":
        return ZFunction(self.factors + other.factors, Fraction(self.coef) * other.coef,
                         self.mono * other.mono, self.zpow + other.zpow)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ZFunction) and self.factors == other.factors
                and self.coef == other.coef and self.mono == other.mono and self.zpow == other.zpow)

    def __hash__(self) -> int:
        return hash((self.factors, self.zpow, self.mono))

    def subs(self, mapping) -> "ZFunction":
        return ZFunction([(a.subs(mapping), e) for a, e in self.factors], self.coef,
                         self.mono.subs(mapping), self.zpow)

    def degree_at_zero(self) -> int:
        return self.zpow - sum(e for _, e in self.factors)

    def value_at(self, z0: Monomial) -> FactoredScalar:
        """Evaluate at z = z0; a vanishing factor is tracked as zero_order."""
        return FactoredScalar(self.coef, self.mono * z0 ** self.zpow,
                              [(a / z0, e) for a, e in self.factors])

    def plus_modes(self, order: int) -> List[LaurentPoly]:
        """Coefficients of z^-m, m = 0..order, of the expansion at z = infinity."""
        if self.zpow > 0:
            raise SingularExpansion("pole at infinity")
        base = expand_product(self.factors, order)
        head = LaurentPoly.monomial(self.mono, self.coef)
        k = self.zpow
        return [head * base[m + k] if m + k >= 0 else ZERO for m in range(order + 1)]

    def minus_modes(self, order: int) -> List[LaurentPoly]:
        """Coefficients of z^m, m = 0..order, of the expansion at z = 0."""
        shift = self.degree_at_zero()
        if shift < 0:
            raise SingularExpansion("pole at zero")
        coef = Fraction(self.coef)
        mono = self.mono
        for a, e in self.factors:
            coef *= (-1) ** (e & 1)
            mono = mono * a ** e
        base = expand_product([(a.inverse(), e) for a, e in self.factors], order)
        head = LaurentPoly.monomial(mono, coef)
        return [head * base[m - shift] if m - shift >= 0 else ZERO for m in range(order + 1)]

    def poles(self) -> List[Monomial]:
        return [a for a, e in self.factors if e < 0]

    def to_text(self) -> str:
        parts = []
        if self.coef != 1 or not self.mono.is_one():
            parts.append(FactoredScalar(self.coef, self.mono).to_text())
        if self.zpow:
            parts.append(f"z^{self.zpow}")
        for a, e in self.factors:
            parts.append(f"(1-{a.to_text()}/z)" + ("" if e == 1 else f"^{e}"))
        return "*".join(parts) if parts else "1"


def zfunction_from_factored(f: FactoredScalar, var: str = "z") -> ZFunction:
    """Convert a FactoredScalar whose arguments are linear in ``var``."""
    if f.zero_order:
        raise ValueError("degenerate factor")
    coef = Fraction(f.coef)
    mono = f.mono
    zpow = mono.exponent(var)
    mono = mono * Monomial.var(var, -zpow)
    out = []
    for a, e in f.factors:
        d = a.exponent(var)
        if d == 0:
            raise ValueError(f"factor (1-{a.to_text()}) does not involve {var}")
        c = a * Monomial.var(var, -d)
        if d == -1:
            out.append((c, e))
        elif d == 1:
            # (1 - c z) = -c z (1 - c^-1 / z)
            coef *= (-1) ** (e & 1)
            mono = mono * c ** e
            zpow += e
            out.append((c.inverse(), e))
        else:
            raise ValueError(f"argument {a.to_text()} is not linear in {var}")
    return ZFunction(out, coef, mono, zpow)


def delta_residues(f, var: str = "z") -> List[Tuple[Monomial, FactoredScalar]]:
    """All (pole, res_{z=pole} f dz/z) for a function regular at 0 and infinity.

    Accepts a :class:`ZFunction` or a :class:`FactoredScalar` in ``var``.
    """
    if isinstance(f, FactoredScalar):
        f = zfunction_from_factored(f, var)
    if f.zpow > 0 or f.degree_at_zero() < 0:
        raise SingularExpansion("function must be regular at 0 and infinity")
    out = []
    for a, e in f.factors:
        if e < -1:
            raise MultiplePoleError(f"pole of order {-e} at z = {a.to_text()}")
        if e == -1:
            rest = ZFunction([(b, x) for b, x in f.factors if b != a], f.coef, f.mono, f.zpow)
            out.append((a, rest.value_at(a)))
    return out
