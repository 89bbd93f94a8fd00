"""The submodules W^N(u) of V(u) x V(u q2^-1) x ... x V(u q2^(1-N)).

``modified="fock"`` multiplies f(z) and psi+-(z) by
beta_N(z) = (1 - q2 q3^N u/z) / (1 - q3^N u/z), giving the stable operators
whose inductive limit is the Fock module.  ``modified=TailSpec`` uses the
resonance analogue beta_{k,N} and specializes every coefficient to the
resonance locus.
"""

from __future__ import annotations

from typing import List, Optional, Tuple, Union

from ..coeff import (FactoredScalar, LaurentPoly, Monomial, ONE, ZFunction, resonance_factored,
                     resonance_map, specialize_poly)
from ..partition import TailSpec, is_partition
from .base import DeltaTerm, Module, Q1, Q2, Q3, e_prefactor, f_prefactor
from .vector import U


def _b(a: Monomial) -> Tuple[Monomial, int]:
    return (a, 1)


def wn_e_product(lam, i: int, upto: int) -> FactoredScalar:
    """prod_{j<i} of the e-coefficient factors (1-based i), rows j = 1..upto."""
    fac = []
    li = lam[i - 1]
    for j in range(1, min(i, upto + 1)):
        d = li - lam[j - 1]
        fac += [(Q1 ** d * Q3 ** (i - j - 1), 1), (Q1 ** (d + 1) * Q3 ** (i - j + 1), 1),
                (Q1 ** d * Q3 ** (i - j), -1), (Q1 ** (d + 1) * Q3 ** (i - j), -1)]
    return FactoredScalar(1, factors=fac)


def wn_f_product(lam, i: int, N: int) -> FactoredScalar:
    """prod_{i<j<=N} of the f-coefficient factors."""
    fac = []
    li = lam[i - 1]
    for j in range(i + 1, N + 1):
        d = lam[j - 1] - li
        fac += [(Q1 ** (d + 1) * Q3 ** (j - i + 1), 1), (Q1 ** d * Q3 ** (j - i - 1), 1),
                (Q1 ** (d + 1) * Q3 ** (j - i), -1), (Q1 ** d * Q3 ** (j - i), -1)]
    return FactoredScalar(1, factors=fac)


def wn_psi_factors(lam, u: Monomial = U, rows=None) -> List[Tuple[Monomial, int]]:
    out = []
    rows = range(1, len(lam) + 1) if rows is None else rows
    for i in rows:
        li = lam[i - 1]
        out += [(Q1 ** li * Q3 ** i * u, 1), (Q1 ** (li - 1) * Q3 ** (i - 2) * u, 1),
                (Q1 ** li * Q3 ** (i - 1) * u, -1), (Q1 ** (li - 1) * Q3 ** (i - 1) * u, -1)]
    return out


def beta_fock(N: int, u: Monomial = U) -> ZFunction:
    """beta_N(z) = (1 - q2 q3^N u/z)/(1 - q3^N u/z)."""
    return ZFunction([(Q2 * Q3 ** N * u, 1), (Q3 ** N * u, -1)])


def beta_resonance(spec: TailSpec, N: int, u: Monomial = U, printed: bool = False) -> ZFunction:
    """beta_{k,N}(z) for N = nu*k + i + 1, 0 <= i < k.

    Each product runs over the k tail rows N+1..N+k, and the q1-exponent of
    row j carries its own c_j.  ``printed=True`` puts c_i in every factor
    instead; that variant breaks stability whenever c is not constant (kept
    so the tests can show it).
    """
    k = spec.k
    nu, i = divmod(N - 1, k)
    cvec = (0,) + spec.c

    def c(j):
        return cvec[i] if printed else cvec[j]

    fac = []
    for j in range(0, i + 1):
        fac += [(Q1 ** (-c(j) - nu - 1) * Q3 ** (-nu + j) * u, 1),
                (Q1 ** (-c(j) - nu - 1) * Q3 ** (-nu + j - 1) * u, -1)]
    for j in range(i + 1, k):
        fac += [(Q1 ** (-c(j) - nu) * Q3 ** (-nu + j + 1) * u, 1),
                (Q1 ** (-c(j) - nu) * Q3 ** (-nu + j) * u, -1)]
    return ZFunction(fac)


def beta_tail_rows(spec: TailSpec, N: int, u: Monomial = U) -> ZFunction:
    """prod_{m=N+1}^{N+k} (1 - q1^l_m q3^m u/z)/(1 - q1^l_m q3^(m-1) u/z), l = lambda0.

    Equal to ``beta_resonance`` on the resonance locus.
    """
    fac = []
    for m in range(N + 1, N + spec.k + 1):
        lm = spec.value(m)
        fac += [(Q1 ** lm * Q3 ** m * u, 1), (Q1 ** lm * Q3 ** (m - 1) * u, -1)]
    return ZFunction(fac)


class WNModule(Module):
    """W^N(u), basis |lambda> for weakly decreasing lambda in Z^N."""

    family = "wn"

    def __init__(self, N: int, u: Monomial = U, modified: Union[None, str, TailSpec] = None,
                 beta: Optional[ZFunction] = None):
        super().__init__()
        self.N = N
        self.u = u
        self.modified = modified
        self.spec = modified if isinstance(modified, TailSpec) else None
        if beta is not None:
            self.beta = beta
        elif modified == "fock":
            self.beta = beta_fock(N, u)
        elif self.spec is not None:
            self.beta = beta_resonance(self.spec, N, u)
        else:
            self.beta = None
        self._map = resonance_map(self.spec.k, self.spec.r) if self.spec else None

    def _finish(self, c: FactoredScalar) -> FactoredScalar:
        if self._map is None:
            return c
        return resonance_factored(c, self.spec.k, self.spec.r)

    def _support(self, m: Monomial) -> Monomial:
        return m if self._map is None else m.subs(self._map)

    def specialize(self, p: LaurentPoly) -> LaurentPoly:
        return p if self._map is None else specialize_poly(p, self.spec.k, self.spec.r)

    def _e_terms(self, lam) -> List[DeltaTerm]:
        out = []
        for i in range(1, self.N + 1):
            c = e_prefactor() * wn_e_product(lam, i, self.N)
            target = lam[:i - 1] + (lam[i - 1] + 1,) + lam[i:]
            support = Q1 ** lam[i - 1] * Q3 ** (i - 1) * self.u
            c = self._finish(c)
            if not c.is_zero():
                assert is_partition(target), f"e leaves the partitions: {lam} -> {target}"
            out.append(DeltaTerm(self._support(support), c, target))
        return out

    def _f_terms(self, lam) -> List[DeltaTerm]:
        out = []
        for i in range(1, self.N + 1):
            support = Q1 ** (lam[i - 1] - 1) * Q3 ** (i - 1) * self.u
            c = f_prefactor() * wn_f_product(lam, i, self.N)
            if self.beta is not None:
                c = c * self.beta.value_at(support)
            target = lam[:i - 1] + (lam[i - 1] - 1,) + lam[i:]
            c = self._finish(c)
            if not c.is_zero():
                assert is_partition(target), f"f leaves the partitions: {lam} -> {target}"
            out.append(DeltaTerm(self._support(support), c, target))
        return out

    def _psi(self, lam) -> ZFunction:
        z = ZFunction(wn_psi_factors(lam, self.u))
        if self.beta is not None:
            z = z * self.beta
        if self._map is not None:
            z = z.subs(self._map)
        return z

    def expected_level(self):
        if self.modified == "fock":
            return ONE, LaurentPoly.monomial(Q2)
        if self.spec is not None:
            return ONE, self.specialize(LaurentPoly.monomial(Q3 ** self.spec.k))
        return ONE, ONE

    def params(self):
        p = {"family": self.family, "N": self.N, "u": self.u.to_text()}
        if self.modified == "fock":
            p["modified"] = "fock"
        elif self.spec is not None:
            p["modified"] = {"k": self.spec.k, "r": self.spec.r, "c": list(self.spec.c)}
        return p

    def tensor_label(self, lam) -> Tuple[int, ...]:
        """Label of |lambda> inside V(u) x ... x V(u q2^(1-N)): a_s = lambda_s - s + 1."""
        return tuple(x - s for s, x in enumerate(lam))

    def tensor_parameters(self) -> Tuple[Monomial, ...]:
        return tuple(self.u * Q2 ** (-s) for s in range(self.N))


def wn_apply(g, lam, N: int, u: Monomial = U):
    return WNModule(N, u).apply(g, tuple(lam))


def wn_modified_apply(g, lam, N: int, u: Monomial = U):
    if lam[-1] < 0:
        raise ValueError("modified operators act on lambda with nonnegative entries")
    return WNModule(N, u, modified="fock").apply(g, tuple(lam))
