"""Macdonald polynomials in N variables over Q(q, t).

This module is an oracle: it uses sympy's sparse polynomial rings and
rational function fields and never touches the hand-written ``coeff``
arithmetic, except in :func:`bridge` and :func:`to_scalar`, which translate
between the two worlds.

Symmetric functions are stored in the monomial basis, keyed by weakly
decreasing integer N-tuples (negative entries allowed).  Operations that
need an honest polynomial shift by a power of e_N = x_1 ... x_N first.
"""

from __future__ import annotations

import json
from fractions import Fraction
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.fields import field
from sympy.polys.rings import ring

from .coeff import FactoredScalar, LaurentPoly, Monomial, Scalar, check_pair
from .partition import dominance_leq, partitions_of

K, q, t = field("q,t", QQ)
_KP, _p = field("p", QQ)

Shape = Tuple[int, ...]


@dataclass(frozen=True)
class MacParams:
    """The bridge q = q1, t = q3^-1 (so q2 = q^-1 t)."""

    q: str = "q"
    t: str = "t"
    bridge: Tuple[Tuple[str, str], ...] = (("q", "q1"), ("t", "q3^-1"))


@lru_cache(maxsize=None)
def _ring(N: int):
    R, *_ = ring(",".join(f"x{i}" for i in range(1, N + 1)), K)
    return R


def _pad(lam: Sequence[int], N: int) -> Shape:
    lam = tuple(lam)
    if len(lam) > N:
        if any(lam[N:]):
            raise ValueError(f"{lam} has more than {N} nonzero parts")
        lam = lam[:N]
    return lam + (0,) * (N - len(lam))


def _is_decreasing(s: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(s, s[1:]))


@dataclass
class SymFunc:
    N: int
    expansion: Dict[Shape, object] = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.expansion.items():
            lam = _pad(lam, self.N)
            assert _is_decreasing(lam), f"{lam} is not weakly decreasing"
            c = K(c)
            if c:
                clean[lam] = clean.get(lam, K.zero) + c
        self.expansion = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def monomial(cls, lam: Sequence[int], N: int) -> "SymFunc":
        return cls(N, {_pad(lam, N): K.one})

    def __getitem__(self, lam):
        return self.expansion.get(_pad(lam, self.N), K.zero)

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.N == other.N and self.expansion == other.expansion

    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self.expansion)
        for lam, c in other.expansion.items():
            out[lam] = out.get(lam, K.zero) + c
        return SymFunc(self.N, out)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        c = K(c)
        return SymFunc(self.N, {lam: c * v for lam, v in self.expansion.items()})

    def is_zero(self) -> bool:
        return not self.expansion

    def min_part(self) -> int:
        return min((lam[-1] for lam in self.expansion), default=0)

    def shift(self, s: int) -> "SymFunc":
        """Multiply by e_N^s."""
        return SymFunc(self.N, {tuple(a + s for a in lam): c for lam, c in self.expansion.items()})

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        assert self.N == other.N
        a, b = self.min_part(), other.min_part()
        prod = to_poly(self.shift(-a)) * to_poly(other.shift(-b))
        return from_poly(prod, self.N).shift(a + b)

    def to_json(self) -> dict:
        terms = [{"shape": list(lam), "coeff": field_text(c)} for lam, c in sorted(self.expansion.items(), reverse=True)]
        return {"N": self.N, "basis": "m", "terms": terms}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def to_text(self) -> str:
        if not self.expansion:
            return "0"
        return "\n".join(f"m{list(lam)}: {field_text(c)}" for lam, c in sorted(self.expansion.items(), reverse=True))


def to_poly(f: SymFunc):
    """Expand a polynomial (nonnegative) symmetric function in x_1..x_N."""
    R = _ring(f.N)
    terms = {}
    for lam, c in f.expansion.items():
        if lam and lam[-1] < 0:
            raise ValueError("shift by a power of e_N before expanding a Laurent function")
        for perm in set(permutations(lam)):
            terms[perm] = c
    return R(terms)


def from_poly(p, N: int, check: bool = True) -> SymFunc:
    out = {}
    for exps, c in p.terms():
        if _is_decreasing(exps):
            out[tuple(exps)] = c
    f = SymFunc(N, out)
    if check:
        assert to_poly(f) == p, "polynomial is not symmetric"
    return f


# -- operators --------------------------------------------------------------------

def _t_shift(p, i: int, qq):
    """T_{q, x_i}: x_i -> qq x_i."""
    R = p.ring
    return R({exps: c * qq ** exps[i] for exps, c in p.terms()})


def apply_macdonald_D(f: SymFunc, sign: int = 1) -> SymFunc:
    """D^1_N (sign +1) or D^-1_N = D^1_N(q^-1, t^-1) (sign -1).

    With Delta = prod_{i<j} (x_i - x_j) the operator is
    Delta^-1 sum_i (-1)^(i-1) prod_{j!=i} (t x_i - x_j) Delta_i T_{q,x_i},
    where Delta_i omits x_i.  The division by Delta is exact.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    N = f.N
    s = f.min_part()
    R = _ring(N)
    xs = R.gens
    qq, tt = (q, t) if sign == 1 else (1 / q, 1 / t)
    body = to_poly(f.shift(-s))
    delta = R.one
    for i in range(N):
        for j in range(i + 1, N):
            delta *= xs[i] - xs[j]
    num = R.zero
    for i in range(N):
        a = R.one
        for j in range(N):
            if j != i:
                a *= tt * xs[i] - xs[j]
        d = R.one
        rest = [j for j in range(N) if j != i]
        for x, y in ((x, y) for n, x in enumerate(rest) for y in rest[n + 1:]):
            d *= xs[x] - xs[y]
        term = a * d * _t_shift(body, i, qq)
        num += term if i % 2 == 0 else -term
    quo = num.exquo(delta)
    assert quo * delta == num
    # D(e_N^s g) = q^s e_N^s D(g)
    return from_poly(quo, N).shift(s).scale(qq ** s)


def d1_eigenvalue(lam: Sequence[int], N: int, sign: int = 1):
    lam = _pad(lam, N)
    return sum((q ** (sign * lam[i]) * t ** (sign * (N - 1 - i)) for i in range(N)), K.zero)


# -- Macdonald polynomials -------------------------------------------------------

def _below(lam: Shape, N: int) -> List[Shape]:
    """Partitions mu <= lam (dominance), |mu| = |lam|, at most N parts; lex-descending."""
    out = [_pad(mu, N) for mu in partitions_of(sum(lam), max_len=N)]
    out = [mu for mu in out if dominance_leq(mu, lam)]
    return sorted(out, reverse=True)


@lru_cache(maxsize=None)
def _D_column(mu: Shape, N: int) -> Dict[Shape, object]:
    return apply_macdonald_D(SymFunc.monomial(mu, N)).expansion


@lru_cache(maxsize=None)
def _P(lam: Shape, N: int) -> Tuple[Tuple[Shape, object], ...]:
    basis = _below(lam, N)
    E = d1_eigenvalue(lam, N)
    u = {lam: K.one}
    for nu in basis[1:]:
        diag = d1_eigenvalue(nu, N)
        assert diag != E, f"eigenvalue collision between {lam} and {nu}"
        rhs = K.zero
        for mu, c in u.items():
            rhs += c * _D_column(mu, N).get(nu, K.zero)
        u[nu] = rhs / (E - diag)
    return tuple((mu, c) for mu, c in u.items() if c)


def macdonald_P(lam: Sequence[int], N: int) -> SymFunc:
    lam = _pad(lam, N)
    if not _is_decreasing(lam) or (lam and lam[-1] < 0):
        raise ValueError(f"{lam} is not a partition")
    return SymFunc(N, dict(_P(lam, N)))


def macdonald_P_laurent(lam: Sequence[int], N: int) -> SymFunc:
    lam = tuple(lam)
    if len(lam) != N:
        lam = _pad(lam, N)
    if not _is_decreasing(lam):
        raise ValueError(f"{lam} is not weakly decreasing")
    s = lam[-1]
    return macdonald_P(tuple(a - s for a in lam), N).shift(s)


def expand_in_P(f: SymFunc) -> Dict[Shape, object]:
    """Coefficients c_mu with f = sum c_mu P_mu (Laurent P's allowed)."""
    rest = f
    out = {}
    while not rest.is_zero():
        top = max(rest.expansion)  # lex order refines dominance
        c = rest.expansion[top]
        out[top] = c
        rest = rest - macdonald_P_laurent(top, f.N).scale(c)
    return out


def pieri_e1(lam: Sequence[int], N: int) -> Dict[Shape, object]:
    """(x_1 + ... + x_N) P_lam expanded in the P basis."""
    return expand_in_P(macdonald_P_laurent(_pad(lam, N), N) * SymFunc.monomial((1,), N))


def pieri_e1_inverse(lam: Sequence[int], N: int) -> Dict[Shape, object]:
    """(x_1^-1 + ... + x_N^-1) P_lam expanded in the P basis."""
    inv = SymFunc.monomial((0,) * (N - 1) + (-1,), N)
    return expand_in_P(macdonald_P_laurent(_pad(lam, N), N) * inv)


# -- wheel condition ---------------------------------------------------------------

def _compositions(n: int, parts: int) -> Iterable[Tuple[int, ...]]:
    for c in product(range(n + 1), repeat=parts):
        if sum(c) == n:
            yield c


def _to_p(c, k: int, r: int):
    """Specialize an element of Q(q, t) to q = p^(k+1), t = p^(1-r)."""
    qv, tv = _p ** (k + 1), _p ** (1 - r)
    n = _eval_qt(c.numer, qv, tv)
    d = _eval_qt(c.denom, qv, tv)
    if not d:
        raise ZeroDivisionError("coefficient has a pole on the resonance locus")
    return n / d


def _eval_qt(poly, qv, tv):
    out = _KP.zero
    for (a, b), c in poly.terms():
        out += _KP(c) * qv ** a * tv ** b
    return out


def wheel_vanishes(f: SymFunc, k: int, r: int) -> bool:
    """True iff f vanishes on x_i = x_1 t^(i-1) q^(s_1+...+s_(i-1)), i <= k+1, at resonance.

    Resonance is q1^(1-r) q3^(k+1) = 1, i.e. q = p^(k+1), t = p^(1-r) under the
    bridge.  x_1 and x_(k+2)..x_N stay free.
    """
    check_pair(k, r)
    N = f.N
    if N < k + 1:
        raise ValueError("wheel condition needs N >= k+1")
    if f.is_zero():
        return True
    s0 = f.min_part()
    g = f.shift(-s0)
    Rp, *_ = ring(",".join(f"x{i}" for i in range(1, N + 1)), _KP)
    body = {}
    for lam, c in g.expansion.items():
        cp = _to_p(c, k, r)
        for perm in set(permutations(lam)):
            body[perm] = cp
    poly = Rp(body)
    xs = Rp.gens
    qv, tv = _p ** (k + 1), _p ** (1 - r)
    for s in _compositions(r - 1, k + 1):
        subs = []
        acc = 0
        for i in range(1, k + 1):
            acc += s[i - 1]
            subs.append((xs[i], xs[0] * tv ** i * qv ** acc))
        if poly.compose(subs):
            return False
    return True


# -- bridge to coeff ---------------------------------------------------------------

_BRIDGE = {"q1": (1, 0), "q3": (0, -1)}


def bridge(x) -> object:
    """Map a coefficient over Q(q1, q3) (u already set to 1) into Q(q, t)."""
    if isinstance(x, FactoredScalar):
        x = x.to_scalar()
    if isinstance(x, Scalar):
        return bridge(x.num) / bridge(x.den)
    if isinstance(x, Monomial):
        x = LaurentPoly.monomial(x)
    if isinstance(x, LaurentPoly):
        out = K.zero
        for m, c in x.terms.items():
            term = K(c)
            for v, e in m.key:
                if v not in _BRIDGE:
                    raise ValueError(f"variable {v} has no image under the bridge")
                a, b = _BRIDGE[v]
                term *= q ** (a * e) * t ** (b * e)
            out += term
        return out
    return K(x)


def _poly_text(poly) -> LaurentPoly:
    return LaurentPoly({Monomial({"q": a, "t": b}): _rat(c) for (a, b), c in poly.terms()})


def _rat(c):
    c = Fraction(int(c.numerator), int(c.denominator))
    return c.numerator if c.denominator == 1 else c


def to_scalar(c) -> Scalar:
    """An element of Q(q, t) as a coeff Scalar in the variables q, t."""
    return Scalar(_poly_text(c.numer), _poly_text(c.denom))


def field_text(c) -> str:
    return to_scalar(K(c)).to_text()
