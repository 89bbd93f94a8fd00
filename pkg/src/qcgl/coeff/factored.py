"""Product-form coefficients and sums of them.

A :class:`FactoredScalar` is ``c * m * prod (1 - a)^e`` with ``c`` rational,
``m`` a monomial and each argument ``a`` a monomial.  Arguments are stored in
a canonical orientation (first exponent in variable order positive), using
``1 - a^-1 = -a^-1 (1 - a)``, so equal factors always merge.

A factor whose argument is the monomial ``1`` is degenerate: it is tracked as
``zero_order`` (positive in the numerator, negative in the denominator).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .poly import ONE, ONE_MONO, LaurentPoly, Monomial, Rational, _from_packed, var_rank
from .scalar import Scalar


class DivisionByZero(ZeroDivisionError):
    """A degenerate factor (1 - 1) sits in a denominator."""


def canonical_arg(a: Monomial) -> Tuple[Monomial, bool]:
    """Return (oriented argument, flipped?)."""
    if a.key and a.key[0][1] < 0:
        return a.inverse(), True
    return a, False


class FactoredScalar:
    __slots__ = ("coef", "mono", "factors", "zero_order", "_key")

    def __init__(self, coef: Rational = 1, mono: Monomial = ONE_MONO,
                 factors: Iterable[Tuple[Monomial, int]] = (), zero_order: int = 0):
        coef = Fraction(coef)
        fac: Dict[Monomial, int] = {}
        for a, e in factors:
            if e == 0:
                continue
            if a.is_one():
                zero_order += e
                continue
            b, flipped = canonical_arg(a)
            if flipped:
                # (1 - a)^e = (-a)^e (1 - a^-1)^e
                coef *= (-1) ** (e & 1)
                mono = mono * a ** e
            fac[b] = fac.get(b, 0) + e
        self.coef = coef.numerator if coef.denominator == 1 else coef
        self.mono = mono
        self.factors = tuple(sorted(((a, e) for a, e in fac.items() if e),
                                    key=lambda p: _arg_sort_key(p[0])))
        self.zero_order = zero_order
        self._key = None

    @classmethod
    def _raw(cls, coef, mono, factors, zero_order):
        f = cls.__new__(cls)
        f.coef, f.mono, f.factors, f.zero_order, f._key = coef, mono, factors, zero_order, None
        return f

    @classmethod
    def binomial(cls, arg: Monomial, exp: int = 1) -> "FactoredScalar":
        return cls(1, ONE_MONO, [(arg, exp)])

    @classmethod
    def monomial(cls, m: Monomial, coef: Rational = 1) -> "FactoredScalar":
        return cls(coef, m)

    # -- algebra -------------------------------------------------------------
    def key(self):
        if self._key is None:
            self._key = (self.coef, self.mono.packed, tuple((a.packed, e) for a, e in self.factors), self.zero_order)
        return self._key

    def shape_key(self):
        """Key ignoring the rational constant and monomial prefactor."""
        return (tuple((a.packed, e) for a, e in self.factors), self.zero_order)

    def __hash__(self) -> int:
        return hash(self.key())

    def __eq__(self, other) -> bool:
        return isinstance(other, FactoredScalar) and self.key() == other.key()

    def is_zero(self) -> bool:
        return self.coef == 0 or self.zero_order > 0

    def is_singular(self) -> bool:
        return self.zero_order < 0

    def __mul__(self, other) -> "FactoredScalar":
        if isinstance(other, Monomial):
            return FactoredScalar._raw(self.coef, self.mono * other, self.factors, self.zero_order)
        if isinstance(other, (int, Fraction)):
            return FactoredScalar._raw(_cmul(self.coef, other), self.mono, self.factors, self.zero_order)
        if not other.factors:
            fac = self.factors
        elif not self.factors:
            fac = other.factors
        else:
            d = dict(self.factors)
            for a, e in other.factors:
                s = d.get(a, 0) + e
                if s:
                    d[a] = s
                else:
                    del d[a]
            fac = tuple(sorted(d.items(), key=lambda p: _arg_sort_key(p[0])))
        return FactoredScalar._raw(_cmul(self.coef, other.coef), self.mono * other.mono, fac,
                                   self.zero_order + other.zero_order)

    __rmul__ = __mul__

    def inverse(self) -> "FactoredScalar":
        if self.coef == 0:
            raise DivisionByZero("inverse of zero")
        c = 1 / Fraction(self.coef)
        return FactoredScalar._raw(c.numerator if c.denominator == 1 else c, self.mono.inverse(),
                                   tuple((a, -e) for a, e in self.factors), -self.zero_order)

    def __truediv__(self, other: "FactoredScalar") -> "FactoredScalar":
        return self * other.inverse()

    def __pow__(self, n: int) -> "FactoredScalar":
        if n < 0:
            return self.inverse() ** (-n)
        c = Fraction(self.coef) ** n
        return FactoredScalar._raw(c.numerator if c.denominator == 1 else c, self.mono ** n,
                                   tuple((a, e * n) for a, e in self.factors), self.zero_order * n)

    def __neg__(self) -> "FactoredScalar":
        return self * -1

    def is_one(self) -> bool:
        return self.coef == 1 and self.mono.is_one() and not self.factors and self.zero_order == 0

    def subs(self, mapping: Mapping[str, Monomial]) -> "FactoredScalar":
        """Apply an exponent-lattice substitution to prefactor and arguments."""
        return FactoredScalar(self.coef, self.mono.subs(mapping),
                              [(a.subs(mapping), e) for a, e in self.factors], self.zero_order)

    def evaluate(self, values: Mapping[str, Rational]) -> Fraction:
        if self.zero_order > 0:
            return Fraction(0)
        if self.zero_order < 0:
            raise DivisionByZero("degenerate factor in denominator")
        r = Fraction(self.coef) * self.mono.evaluate(values)
        for a, e in self.factors:
            b = 1 - a.evaluate(values)
            if b == 0 and e < 0:
                raise DivisionByZero(f"factor (1 - {a.to_text()}) vanishes at evaluation point")
            r *= b ** e
        return r

    def numerator_poly(self) -> LaurentPoly:
        p = LaurentPoly.monomial(self.mono, self.coef)
        for a, e in self.factors:
            if e > 0:
                p = p * binomial_power(a, e)
        return p

    def denominator_poly(self) -> LaurentPoly:
        p = ONE
        for a, e in self.factors:
            if e < 0:
                p = p * binomial_power(a, -e)
        return p

    def to_scalar(self) -> Scalar:
        return expand_factored(self)

    def to_text(self) -> str:
        if self.zero_order > 0 or self.coef == 0:
            return "0"
        c = Fraction(self.coef)
        if self.mono.is_one():
            head = str(c)
        elif abs(c) == 1:
            head = ("-" if c < 0 else "") + self.mono.to_text()
        else:
            head = f"{c}*{self.mono.to_text()}"
        parts = [] if head == "1" and self.factors else [head]
        for a, e in self.factors:
            parts.append(f"(1-{a.to_text()})" + ("" if e == 1 else f"^{e}"))
        if self.zero_order < 0:
            parts.append(f"(1-1)^{self.zero_order}")
        return "*".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"FactoredScalar({self.to_text()})"


FS_ONE = FactoredScalar()
FS_ZERO = FactoredScalar(0)


_SORT_KEYS: Dict[int, tuple] = {}


def _arg_sort_key(a: Monomial):
    k = _SORT_KEYS.get(a.packed)
    if k is None:
        k = _SORT_KEYS[a.packed] = tuple((var_rank(v), e) for v, e in a.key)
    return k


def _cmul(x, y):
    if type(x) is int and type(y) is int:
        return x * y
    c = Fraction(x) * y
    return c.numerator if c.denominator == 1 else c


@lru_cache(maxsize=1 << 16)
def _binomial_power_key(packed: int, n: int) -> LaurentPoly:
    a = _from_packed(packed)
    from math import comb
    return LaurentPoly({a ** j: comb(n, j) * (-1) ** j for j in range(n + 1)})


def binomial_power(a: Monomial, n: int) -> LaurentPoly:
    """(1 - a)^n for n >= 0, expanded."""
    return _binomial_power_key(a.packed, n)


def expand_factored(f: FactoredScalar) -> Scalar:
    """Exact expansion; negative-exponent factors go to the denominator."""
    if f.zero_order < 0:
        raise DivisionByZero("degenerate factor (1 - 1) in denominator")
    if f.is_zero():
        return Scalar(0)
    return Scalar(f.numerator_poly(), f.denominator_poly())


# -- refactoring -----------------------------------------------------------

def _divide_by_binomial(p: LaurentPoly, a: Monomial) -> Optional[LaurentPoly]:
    """Exact quotient p / (1 - a), or None when (1 - a) does not divide p.

    Monomials are grouped into cosets of a^Z; (1 - a) divides p iff every
    coset sums to zero, and the quotient coefficients are partial sums.
    """
    av = a.as_dict()
    pivot = next(iter(av))
    step = av[pivot]
    classes: Dict[tuple, Dict[int, Rational]] = {}
    for m, c in p.terms.items():
        md = m.as_dict()
        e = md.get(pivot, 0)
        j, rem = divmod(e, step)
        base = {v: md.get(v, 0) - j * av.get(v, 0) for v in set(md) | set(av)}
        bkey = Monomial(base).key
        classes.setdefault(bkey, {})[j] = c
    out: Dict[Monomial, Rational] = {}
    for bkey, chain in classes.items():
        if sum(chain.values()) != 0:
            return None
        base = Monomial(bkey)
        acc: Rational = 0
        for j in range(min(chain), max(chain)):
            acc += chain.get(j, 0)
            if acc:
                out[base * a ** j] = acc
    return LaurentPoly(out)


def _factor_binomials(p: LaurentPoly, depth: int = 0) -> Optional[List[Monomial]]:
    if len(p.terms) == 1:
        return []
    if depth > 64:
        return None
    ms = sorted(p.terms, key=_arg_sort_key)
    cands = []
    for x, y in combinations(ms, 2):
        a, _ = canonical_arg(x / y)
        if a not in cands:
            cands.append(a)
    # larger arguments first: (1 - a^2) must not be split as (1 - a)(1 + a)
    cands.sort(key=lambda a: -sum(abs(e) for _, e in a.key))
    for a in cands:
        q = _divide_by_binomial(p, a)
        if q is None:
            continue
        rest = _factor_binomials(q, depth + 1)
        if rest is not None:
            return [a] + rest
    return None


def refactor(s: Scalar) -> FactoredScalar:
    """Rewrite a Scalar that is a pure product of binomials in factored form."""
    if s.is_zero():
        return FactoredScalar(0)
    out = FactoredScalar()
    for poly, sign in ((s.num, 1), (s.den, -1)):
        args = _factor_binomials(poly)
        if args is None:
            raise ValueError(f"{poly.to_text()} is not a product of binomials")
        rest = poly
        for a in args:
            rest = _divide_by_binomial(rest, a)
        (m, c), = rest.terms.items()
        part = FactoredScalar(c, m, [(a, 1) for a in args])
        out = out * (part if sign > 0 else part.inverse())
    return out


# -- sums ------------------------------------------------------------------

def _sum_of_products(items: List[Tuple[LaurentPoly, Dict[Monomial, int]]]) -> LaurentPoly:
    """sum_k p_k prod_a (1 - a)^n_ka, sharing multiplications between terms.

    Terms are grouped by their exponent of the most common binomial; each
    group is summed recursively and multiplied by that binomial power once.
    """
    if len(items) == 1:
        p, exps = items[0]
        for a, n in exps.items():
            p = p * binomial_power(a, n)
        return p
    counts: Dict[Monomial, int] = {}
    for _, exps in items:
        for a in exps:
            counts[a] = counts.get(a, 0) + 1
    if not counts:
        total = LaurentPoly()
        for p, _ in items:
            total = total + p
        return total
    a = max(counts, key=lambda b: (counts[b], _arg_sort_key(b)))
    groups: Dict[int, list] = {}
    for p, exps in items:
        rest = dict(exps)
        n = rest.pop(a, 0)
        groups.setdefault(n, []).append((p, rest))
    total = LaurentPoly()
    for n, group in groups.items():
        part = _sum_of_products(group)
        if n and part:
            part = part * binomial_power(a, n)
        total = total + part
    return total


class CoeffSum:
    """Finite sum of ``FactoredScalar * LaurentPoly`` terms.

    Terms whose factored parts agree up to the rational constant and the
    monomial prefactor are merged, so the number of stored terms stays small.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[tuple, Tuple[FactoredScalar, LaurentPoly]]] = None):
        self.terms = {} if terms is None else terms

    @classmethod
    def of(cls, f: FactoredScalar, p: LaurentPoly = ONE) -> "CoeffSum":
        out = cls()
        out.add_term(f, p)
        return out

    def add_term(self, f: FactoredScalar, p: LaurentPoly = ONE) -> None:
        if f.is_zero() or p.is_zero():
            return
        k = f.shape_key()
        base = LaurentPoly.monomial(f.mono, f.coef) * p
        if k in self.terms:
            g, q = self.terms[k]
            s = q + base
            if s.is_zero():
                del self.terms[k]
            else:
                self.terms[k] = (g, s)
        else:
            self.terms[k] = (FactoredScalar._raw(1, ONE_MONO, f.factors, f.zero_order), base)

    def __iadd__(self, other: "CoeffSum") -> "CoeffSum":
        for f, p in other.terms.values():
            self.add_term(f, p)
        return self

    def __add__(self, other: "CoeffSum") -> "CoeffSum":
        out = self.copy()
        out += other
        return out

    def copy(self) -> "CoeffSum":
        return CoeffSum(dict(self.terms))

    def scaled(self, f: FactoredScalar, p: LaurentPoly = ONE) -> "CoeffSum":
        if f.is_one():
            if p == ONE:
                return self.copy()
            out = CoeffSum()
            for k, (g, q) in self.terms.items():
                qp = q * p
                if qp:
                    out.terms[k] = (g, qp)
            return out
        out = CoeffSum()
        for g, q in self.terms.values():
            out.add_term(g * f, q * p)
        return out

    def __neg__(self) -> "CoeffSum":
        return self.scaled(FactoredScalar(-1))

    def items(self):
        return list(self.terms.values())

    def common_denominator(self) -> Dict[Monomial, int]:
        den: Dict[Monomial, int] = {}
        for f, _ in self.terms.values():
            if f.zero_order < 0:
                raise DivisionByZero("degenerate factor (1 - 1) in denominator")
            for a, e in f.factors:
                if e < 0 and -e > den.get(a, 0):
                    den[a] = -e
        return den

    def numerator(self, den: Optional[Dict[Monomial, int]] = None) -> LaurentPoly:
        den = self.common_denominator() if den is None else den
        items = []
        for f, p in self.terms.values():
            if f.zero_order > 0:
                continue
            own = dict(f.factors)
            exps = {}
            for a in set(own) | set(den):
                n = own.get(a, 0) + den.get(a, 0)
                if n:
                    exps[a] = n
            items.append((p, exps))
        return _sum_of_products(items)

    def _shared_exponents(self) -> Dict[Monomial, int]:
        """Per binomial, the smallest exponent over all live terms (absent counts as 0)."""
        live = [dict(f.factors) for f, _ in self.terms.values() if f.zero_order <= 0]
        if not live:
            return {}
        out = {}
        for a in set().union(*live):
            out[a] = min(d.get(a, 0) for d in live)
        return out

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        if len(self.terms) == 1:
            (f, p), = self.terms.values()
            return f.is_zero() or p.is_zero()
        if any(f.zero_order < 0 for f, _ in self.terms.values()):
            raise DivisionByZero("degenerate factor (1 - 1) in denominator")
        # the sum is zero iff it is zero after dividing out the shared binomials
        return self.numerator({a: -e for a, e in self._shared_exponents().items()}).is_zero()

    def to_scalar(self) -> Scalar:
        den = self.common_denominator()
        d = ONE
        for a, n in den.items():
            d = d * binomial_power(a, n)
        return Scalar(self.numerator(den), d)

    def evaluate(self, values: Mapping[str, Rational]) -> Fraction:
        return sum((f.evaluate(values) * p.evaluate(values) for f, p in self.terms.values()), Fraction(0))

    def subs(self, mapping: Mapping[str, Monomial]) -> "CoeffSum":
        out = CoeffSum()
        for f, p in self.terms.values():
            out.add_term(f.subs(mapping), p.subs(mapping))
        return out

    def to_text(self) -> str:
        return self.to_scalar().to_text()
