"""Resonance modules W^{k,r}_c(u) on the locus q1^(1-r) q3^(k+1) = 1.

Labels are :class:`TailedPartition`.  Coefficients are built generically,
then passed through ``resonance_factored`` (vanishing factors cancelled in
pairs, then q1 = p^(k+1), q3 = p^(r-1)).  The infinite products are cut at
the stabilization index and every factor of the following period is checked
to map to exactly 1.
"""

from __future__ import annotations

from typing import List, Tuple

from ..coeff import FactoredScalar, LaurentPoly, Monomial, ONE, ZFunction, resonance_factored, resonance_map, specialize_poly
from ..partition import TailSpec, TailedPartition, is_admissible
from .base import DeltaTerm, Module, Q1, Q3, e_prefactor, f_prefactor
from .vector import U
from .wn import wn_e_product


def _res_f_factor(lam: TailedPartition, i: int, j: int, k: int) -> FactoredScalar:
    li = lam[i]
    a, b = lam[j] - li, lam[j + k] - li
    return FactoredScalar(1, factors=[
        (Q1 ** (b + 1) * Q3 ** (j + k - i + 1), 1), (Q1 ** a * Q3 ** (j - i - 1), 1),
        (Q1 ** a * Q3 ** (j - i), -1), (Q1 ** (b + 1) * Q3 ** (j + k - i), -1)])


def _res_psi_factor(lam: TailedPartition, i: int, k: int, u: Monomial) -> List[Tuple[Monomial, int]]:
    li, lk = lam[i], lam[i + k]
    return [(Q1 ** (li - 1) * Q3 ** (i - 2) * u, 1), (Q1 ** lk * Q3 ** (i + k) * u, 1),
            (Q1 ** lk * Q3 ** (i + k - 1) * u, -1), (Q1 ** (li - 1) * Q3 ** (i - 1) * u, -1)]


class ResonanceModule(Module):
    family = "resonance"

    def __init__(self, spec: TailSpec, u: Monomial = U):
        super().__init__()
        self.spec = spec
        self.k, self.r = spec.k, spec.r
        self.u = u
        self._map = resonance_map(self.k, self.r)

    def _res(self, c: FactoredScalar) -> FactoredScalar:
        return resonance_factored(c, self.k, self.r)

    def specialize(self, p: LaurentPoly) -> LaurentPoly:
        return specialize_poly(p, self.k, self.r)

    def _check_label(self, lam):
        if not isinstance(lam, TailedPartition) or lam.spec != self.spec:
            raise ValueError(f"label {lam!r} does not carry the tail {self.spec}")

    def _e_terms(self, lam: TailedPartition) -> List[DeltaTerm]:
        self._check_label(lam)
        out = []
        n = lam.stab + self.k + 1
        for i in range(1, n + 1):
            c = self.e_coefficient(lam, i)
            target = lam.shifted(i, 1)
            if not is_admissible(target, self.k, self.r) or not target.is_weakly_decreasing():
                assert c.is_zero(), f"e leaves S^(k,r): {lam} -> {target}"
                continue
            support = (Q1 ** lam[i] * Q3 ** (i - 1) * self.u).subs(self._map)
            out.append(DeltaTerm(support, c, target))
        return out

    def e_coefficient(self, lam: TailedPartition, i: int) -> FactoredScalar:
        """<lambda+1_i|e(z)|lambda> at resonance, whether or not the target is admissible."""
        parts = lam.parts(max(i, lam.stab + self.k + 1))
        return self._res(e_prefactor() * wn_e_product(parts, i, i - 1))

    def _f_coeff(self, lam: TailedPartition, i: int) -> FactoredScalar:
        k = self.k
        li = lam[i]
        head = []
        for j in range(i + 1, i + k + 1):
            d = lam[j] - li + 1
            head += [(Q1 ** d * Q3 ** (j - i + 1), 1), (Q1 ** d * Q3 ** (j - i), -1)]
        c = f_prefactor() * FactoredScalar(1, factors=head)
        last = max(lam.stab, i)
        for j in range(i + 1, last + 1):
            c = c * _res_f_factor(lam, i, j, k)
        ext = c
        for j in range(last + 1, last + k + 2):
            ext = ext * _res_f_factor(lam, i, j, k)
        c = self._res(c)
        assert self._res(ext).to_scalar() == c.to_scalar(), "f tail period changes the coefficient at resonance"
        return c

    def _f_terms(self, lam: TailedPartition) -> List[DeltaTerm]:
        self._check_label(lam)
        out = []
        for i in range(1, lam.stab + self.k + 1):
            target = lam.shifted(i, -1)
            admissible = (is_admissible(target, self.k, self.r) and target.is_weakly_decreasing()
                          and all(target[j] >= self.spec.value(j) for j in range(1, target.stab + 1)))
            c = self._f_coeff(lam, i)
            if not admissible:
                assert c.is_zero(), f"f leaves S^(k,r): {lam} -> {target}"
                continue
            support = (Q1 ** (lam[i] - 1) * Q3 ** (i - 1) * self.u).subs(self._map)
            out.append(DeltaTerm(support, c, target))
        return out

    def _psi(self, lam: TailedPartition) -> ZFunction:
        self._check_label(lam)
        k, u = self.k, self.u
        fac = []
        for i in range(1, k + 1):
            fac += [(Q1 ** lam[i] * Q3 ** i * u, 1), (Q1 ** lam[i] * Q3 ** (i - 1) * u, -1)]
        for i in range(1, lam.stab + 1):
            fac += _res_psi_factor(lam, i, k, u)
        for i in range(lam.stab + 1, lam.stab + k + 2):
            assert ZFunction(_res_psi_factor(lam, i, k, u)).subs(self._map) == ZFunction(), \
                "psi tail factor is not 1 at resonance"
        return ZFunction(fac).subs(self._map)

    def expected_level(self):
        return ONE, self.specialize(LaurentPoly.monomial(Q3 ** self.k))

    def params(self):
        return {"family": self.family, "k": self.k, "r": self.r, "c": list(self.spec.c), "u": self.u.to_text()}


def resonance_apply(g, lam: TailedPartition, u: Monomial = U):
    return ResonanceModule(lam.spec, u).apply(g, lam)


def tau_label(lam: TailedPartition, N: int) -> Tuple[int, ...]:
    """The finite label (lambda_1, ..., lambda_N) used inside W^{k,r,N,+}."""
    if N < lam.stab + lam.spec.k:
        raise ValueError("N must cover the prefix plus one tail period")
    return lam.parts(N)
