"""Sparse Laurent monomials and polynomials with rational coefficients.

A monomial keeps a sorted tuple of ``(variable, exponent)`` pairs (for
printing) and a packed integer (for arithmetic).  Variables are ordered by a fixed rank (``q1, q3, u, u_1,
..., p, q, t, X, x_1, ...``) so that printing and comparison are canonical.
The symbol ``q2`` is never stored: it is rewritten as ``q1^-1*q3^-1`` on input.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple, Union

Rational = Union[int, Fraction]
MonoKey = Tuple[Tuple[str, int], ...]

_BASE_ORDER = ("q1", "q3", "u", "p", "q", "t", "X", "x", "s", "z", "w")


@lru_cache(maxsize=None)
def var_rank(name: str) -> tuple:
    """Sort key of a variable name; indexed names (``u_2``) follow their base."""
    base, _, idx = name.partition("_")
    if base in _BASE_ORDER:
        pos = _BASE_ORDER.index(base)
    else:
        pos = len(_BASE_ORDER)
    return (pos, int(idx) if idx.isdigit() else -1, name)


def _norm_coeff(c: Rational) -> Rational:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


# Packed exponent vectors: variable slot i occupies bits [i*_S, (i+1)*_S) as a
# balanced digit, so multiplying monomials is adding Python ints.
_S = 32
_FULL = 1 << _S
_HALF = 1 << (_S - 1)
_MASK = _FULL - 1
_SLOTS: list = []
_SLOT_OF: Dict[str, int] = {}
_INTERN: Dict[int, "Monomial"] = {}


def _slot(name: str) -> int:
    i = _SLOT_OF.get(name)
    if i is None:
        i = _SLOT_OF[name] = len(_SLOTS)
        _SLOTS.append(name)
    return i


def _pack(key: MonoKey) -> int:
    out = 0
    for v, e in key:
        if not -_HALF <= e < _HALF:
            raise OverflowError(f"exponent {e} of {v} out of range")
        out += e << (_S * _slot(v))
    return out


def _unpack(packed: int) -> MonoKey:
    items = []
    i = 0
    while packed:
        r = packed & _MASK
        if r >= _HALF:
            r -= _FULL
        if r:
            items.append((_SLOTS[i], r))
        packed = (packed - r) >> _S
        i += 1
    items.sort(key=lambda p: var_rank(p[0]))
    return tuple(items)


def _from_packed(packed: int) -> "Monomial":
    m = _INTERN.get(packed)
    if m is None:
        m = Monomial.__new__(Monomial)
        m.key = _unpack(packed)
        m.packed = packed
        m._hash = hash(packed)
        _INTERN[packed] = m
    return m


class Monomial:
    """Immutable Laurent monomial in named commuting variables."""

    __slots__ = ("key", "packed", "_hash")

    def __init__(self, exponents: Union[Mapping[str, int], MonoKey, None] = None):
        if exponents is None:
            key: MonoKey = ()
        elif isinstance(exponents, tuple):
            key = tuple(sorted(((v, e) for v, e in exponents if e), key=lambda p: var_rank(p[0])))
        else:
            items = {}
            for v, e in exponents.items():
                if v == "q2":
                    # q2 = q1^-1 q3^-1
                    items["q1"] = items.get("q1", 0) - e
                    items["q3"] = items.get("q3", 0) - e
                elif e:
                    items[v] = items.get(v, 0) + e
            key = tuple(sorted(((v, e) for v, e in items.items() if e), key=lambda p: var_rank(p[0])))
        self.key = key
        self.packed = _pack(key)
        self._hash = hash(self.packed)

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Monomial":
        return cls({name: exp})

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.packed == other.packed

    def __repr__(self) -> str:
        return f"Monomial({self.to_text()})"

    def is_one(self) -> bool:
        return not self.packed

    def __mul__(self, other: "Monomial") -> "Monomial":
        return _from_packed(self.packed + other.packed)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return _from_packed(self.packed - other.packed)

    def __pow__(self, n: int) -> "Monomial":
        return _from_packed(self.packed * n)

    def inverse(self) -> "Monomial":
        return _from_packed(-self.packed)

    def exponent(self, var: str) -> int:
        for v, e in self.key:
            if v == var:
                return e
        return 0

    def as_dict(self) -> Dict[str, int]:
        return dict(self.key)

    def variables(self) -> Tuple[str, ...]:
        return tuple(v for v, _ in self.key)

    def subs(self, mapping: Mapping[str, "Monomial"]) -> "Monomial":
        """Substitute monomials for variables (exponent-lattice map)."""
        out = self.packed
        for v, e in self.key:
            if v in mapping:
                out += (mapping[v].packed - (1 << (_S * _SLOT_OF[v]))) * e
        return _from_packed(out)

    def evaluate(self, values: Mapping[str, Rational]) -> Fraction:
        r = Fraction(1)
        for v, e in self.key:
            r *= Fraction(values[v]) ** e
        return r

    def to_text(self) -> str:
        if not self.key:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self.key)


ONE_MONO = Monomial()
_INTERN[0] = ONE_MONO


def mono(**exps: int) -> Monomial:
    """Shorthand: ``mono(q1=1, q3=-2)``."""
    return Monomial(exps)


class LaurentPoly:
    """Sparse Laurent polynomial: packed monomial -> nonzero rational.

    ``terms`` gives the same data keyed by :class:`Monomial`.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Union[Mapping[Monomial, Rational], None] = None):
        t: Dict[int, Rational] = {}
        if terms:
            for m, c in terms.items():
                k = m.packed
                s = t.get(k, 0) + c
                if s:
                    t[k] = _norm_coeff(s)
                else:
                    t.pop(k, None)
        self._t = t

    @property
    def terms(self) -> Dict[Monomial, Rational]:
        return {_from_packed(k): c for k, c in self._t.items()}

    def __len__(self) -> int:
        return len(self._t)

    @classmethod
    def const(cls, c: Rational) -> "LaurentPoly":
        return cls._rawp({0: _norm_coeff(c)}) if c else cls._rawp({})

    @classmethod
    def monomial(cls, m: Monomial, c: Rational = 1) -> "LaurentPoly":
        return cls._rawp({m.packed: _norm_coeff(c)}) if c else cls._rawp({})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "LaurentPoly":
        return cls.monomial(Monomial.var(name, exp))

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Rational]) -> "LaurentPoly":
        return cls._rawp({m.packed: c for m, c in terms.items()})

    @classmethod
    def _rawp(cls, t: Dict[int, Rational]) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._t = t
        return p

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "LaurentPoly":
        other = _as_poly(other)
        if not other._t:
            return self
        if not self._t:
            return other
        out = dict(self._t)
        for m, c in other._t.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm_coeff(s)
            else:
                del out[m]
        return LaurentPoly._rawp(out)

    __radd__ = __add__

    def add_scaled(self, other: "LaurentPoly", shift: int = 0, c: Rational = 1) -> "LaurentPoly":
        """self + c * X^shift * other, shift a packed monomial."""
        out = dict(self._t)
        for m, d in other._t.items():
            k = m + shift
            s = out.get(k, 0) + c * d
            if s:
                out[k] = _norm_coeff(s)
            else:
                out.pop(k, None)
        return LaurentPoly._rawp(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._rawp({m: -c for m, c in self._t.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, Monomial):
            k = other.packed
            if not k:
                return self
            return LaurentPoly._rawp({m + k: c for m, c in self._t.items()})
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly._rawp({})
            if other == 1:
                return self
            return LaurentPoly._rawp({m: _norm_coeff(c * other) for m, c in self._t.items()})
        other = _as_poly(other)
        a, b = self._t, other._t
        if len(b) < len(a):
            a, b = b, a
        if len(a) == 1:
            (ma, ca), = a.items()
            if ca == 1:
                return LaurentPoly._rawp({ma + mb: cb for mb, cb in b.items()})
            return LaurentPoly._rawp({ma + mb: _norm_coeff(ca * cb) for mb, cb in b.items()})
        out: Dict[int, Rational] = {}
        get = out.get
        bitems = list(b.items())
        for ma, ca in a.items():
            for mb, cb in bitems:
                m = ma + mb
                out[m] = get(m, 0) + ca * cb
        if all(type(c) is int for c in a.values()) and all(type(c) is int for _, c in bitems):
            return LaurentPoly._rawp({m: c for m, c in out.items() if c})
        return LaurentPoly._rawp({m: _norm_coeff(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._t) != 1:
                raise ValueError("negative power of a non-monomial polynomial")
            (m, c), = self._t.items()
            return LaurentPoly._rawp({m * n: _norm_coeff(Fraction(c) ** n)})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()})"

    # -- structure ----------------------------------------------------------
    def monomials(self):
        return [_from_packed(k) for k in self._t]

    def variables(self) -> Tuple[str, ...]:
        vs = {v for m in self.monomials() for v in m.variables()}
        return tuple(sorted(vs, key=var_rank))

    def min_monomial(self) -> Monomial:
        """Monomial of componentwise-minimal exponents over all terms."""
        if not self._t:
            return ONE_MONO
        ms = self.monomials()
        mins = {v: min(m.exponent(v) for m in ms) for v in self.variables()}
        return Monomial(mins)

    def sorted_terms(self):
        """Terms in ascending lexicographic order of exponent vectors."""
        vs = self.variables()
        items = [(_from_packed(k), c) for k, c in self._t.items()]
        return sorted(items, key=lambda mc: tuple(mc[0].exponent(v) for v in vs))

    def leading(self) -> Tuple[Monomial, Rational]:
        return self.sorted_terms()[-1]

    def subs(self, mapping: Mapping[str, Monomial]) -> "LaurentPoly":
        out: Dict[int, Rational] = {}
        for k, c in self._t.items():
            mm = _from_packed(k).subs(mapping).packed
            out[mm] = out.get(mm, 0) + c
        return LaurentPoly._rawp({m: _norm_coeff(c) for m, c in out.items() if c})

    def subs_poly(self, mapping: Mapping[str, "LaurentPoly"]) -> "LaurentPoly":
        """Substitute polynomials for variables (nonnegative powers or monomials)."""
        out = LaurentPoly()
        for m, c in self.terms.items():
            term = LaurentPoly.const(c)
            rest = {}
            for v, e in m.key:
                if v in mapping:
                    term = term * mapping[v] ** e
                else:
                    rest[v] = e
            out = out + term * Monomial(rest)
        return out

    def evaluate(self, values: Mapping[str, Rational]) -> Fraction:
        return sum((Fraction(c) * m.evaluate(values) for m, c in self.terms.items()), Fraction(0))

    def to_text(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            cs = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            if m.is_one():
                body = cs
            elif a == 1:
                body = m.to_text()
            else:
                body = f"{cs}*{m.to_text()}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += sign + body
        return out

    __str__ = to_text


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, Monomial):
        return LaurentPoly.monomial(x)
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)

_TERM_RE = re.compile(r"([+-]?)([^+-]+)")


def parse_monomial(text: str) -> Tuple[Rational, Monomial]:
    coeff: Rational = 1
    exps: Dict[str, int] = {}
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            continue
        if factor[0].isdigit():
            coeff = coeff * Fraction(factor)
            continue
        name, _, exp = factor.partition("^")
        e = int(exp.strip("()")) if exp else 1
        exps[name] = exps.get(name, 0) + e
    return coeff, Monomial(exps)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical text format (``1-q1^2+3/2*q1*q3^-1``)."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return LaurentPoly()
    # protect negative exponents from the term splitter
    text = re.sub(r"\^-(\d+)", r"^(m\1)", text)
    out = LaurentPoly()
    for sign, body in _TERM_RE.findall(text):
        body = re.sub(r"\^\(m(\d+)\)", r"^-\1", body)
        c, m = parse_monomial(body)
        if sign == "-":
            c = -c
        out = out + LaurentPoly.monomial(m, c)
    return out


def poly_arith(op: str, a: LaurentPoly, b: LaurentPoly | None = None) -> LaurentPoly:
    """Dispatch ``add``, ``mul`` or ``neg`` on Laurent polynomials."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


def monomials_product(ms: Iterable[Monomial]) -> Monomial:
    out = ONE_MONO
    for m in ms:
        out = out * m
    return out
