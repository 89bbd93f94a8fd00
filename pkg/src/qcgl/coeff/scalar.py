"""Elements of Q(v1, ..., vn) as a numerator/denominator pair of Laurent polynomials.

No multivariate GCD is ever taken.  Normalization only strips the monomial
content of the denominator and fixes the sign of its leading term; equality
is decided by cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .poly import ONE, ONE_MONO, LaurentPoly, Monomial, Rational, parse_poly


class Scalar:
    __slots__ = ("num", "den")

    def __init__(self, num: Union[LaurentPoly, Rational, Monomial] = 0, den: Union[LaurentPoly, Rational, None] = None):
        num = _poly(num)
        den = ONE if den is None else _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("Scalar with zero denominator")
        if num.is_zero():
            self.num, self.den = num, ONE
            return
        shift = den.min_monomial()
        if not shift.is_one():
            inv = shift.inverse()
            num, den = num * inv, den * inv
        lead = Fraction(den.leading()[1])
        if lead < 0 or len(den.terms) == 1:
            # single-term denominators fold into the numerator
            if len(den.terms) == 1:
                c = Fraction(den.leading()[1])
                num, den = num * (1 / c), ONE
            else:
                num, den = -num, -den
        self.num, self.den = num, den

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "Scalar":
        other = as_scalar(other)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        s = Scalar.__new__(Scalar)
        s.num, s.den = -self.num, self.den
        return s

    def __sub__(self, other) -> "Scalar":
        return self + (-as_scalar(other))

    def __rsub__(self, other) -> "Scalar":
        return as_scalar(other) - self

    def __mul__(self, other) -> "Scalar":
        other = as_scalar(other)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        other = as_scalar(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "Scalar":
        return as_scalar(other) / self

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return Scalar(self.den ** (-n), self.num ** (-n))
        return Scalar(self.num ** n, self.den ** n)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        return scalar_eq(self, other)

    __hash__ = None  # equality is not structural

    def subs(self, mapping: Mapping[str, Monomial]) -> "Scalar":
        den = self.den.subs(mapping)
        if den.is_zero():
            raise ZeroDivisionError("denominator vanishes under substitution")
        return Scalar(self.num.subs(mapping), den)

    def evaluate(self, values: Mapping[str, Rational]) -> Fraction:
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(values) / d

    def to_text(self) -> str:
        return f"({self.num.to_text()})/({self.den.to_text()})"

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Scalar({self.to_text()})"


def _poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, Monomial):
        return LaurentPoly.monomial(x)
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if hasattr(x, "to_scalar"):
        return x.to_scalar()
    return Scalar(_poly(x))


def scalar_eq(a: Scalar, b: Scalar) -> bool:
    """a == b in the rational function field, by cross-multiplication."""
    if a.den == b.den:
        return a.num == b.num
    return a.num * b.den == b.num * a.den


def parse_scalar(text: str) -> Scalar:
    """Inverse of :meth:`Scalar.to_text`; a bare polynomial is accepted too."""
    text = text.strip()
    if text.startswith("(") and ")/(" in text and text.endswith(")"):
        num, den = text[1:-1].split(")/(", 1)
        return Scalar(parse_poly(num), parse_poly(den))
    return Scalar(parse_poly(text))


S_ZERO = Scalar(0)
S_ONE = Scalar(1)
__all__ = ["Scalar", "as_scalar", "scalar_eq", "parse_scalar", "S_ZERO", "S_ONE", "ONE_MONO"]
