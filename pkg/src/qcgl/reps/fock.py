"""The Fock module F(u): basis |lambda> for partitions lambda (level (1, q2)).

Matrix coefficients are the N -> infinity limits of the modified W^N
operators.  The infinite products are cut at row l(lambda) and the next two
factors are checked to be exactly 1.
"""

from __future__ import annotations

from typing import List, Tuple

from ..coeff import FactoredScalar, LaurentPoly, Monomial, ONE, ZFunction
from ..partition import add_box, is_partition, trim
from .base import DeltaTerm, Module, Q1, Q2, Q3, e_prefactor, f_prefactor
from .vector import U, gamma_fn
from .wn import wn_e_product


def _part(lam, j: int) -> int:
    return lam[j - 1] if j <= len(lam) else 0


def _fock_f_factor(lam, i: int, j: int) -> FactoredScalar:
    li = _part(lam, i)
    a, b = _part(lam, j) - li, _part(lam, j + 1) - li
    return FactoredScalar(1, factors=[
        (Q1 ** (a + 1) * Q3 ** (j - i + 1), 1), (Q1 ** b * Q3 ** (j - i), 1),
        (Q1 ** (b + 1) * Q3 ** (j - i + 1), -1), (Q1 ** a * Q3 ** (j - i), -1)])


def _fock_psi_factor(lam, i: int, u: Monomial) -> List[Tuple[Monomial, int]]:
    li, lj = _part(lam, i), _part(lam, i + 1)
    return [(Q1 ** li * Q3 ** i * u, 1), (Q1 ** (lj - 1) * Q3 ** (i - 1) * u, 1),
            (Q1 ** lj * Q3 ** i * u, -1), (Q1 ** (li - 1) * Q3 ** (i - 1) * u, -1)]


class FockModule(Module):
    family = "fock"

    def __init__(self, u: Monomial = U):
        super().__init__()
        self.u = u

    def _e_terms(self, lam) -> List[DeltaTerm]:
        out = []
        for i in range(1, len(lam) + 2):
            padded = tuple(lam) + (0,)
            c = e_prefactor() * wn_e_product(padded, i, i - 1)
            target = add_box(lam, i)
            if not c.is_zero():
                assert is_partition(target), f"e leaves the partitions: {lam} -> {target}"
            support = Q1 ** _part(lam, i) * Q3 ** (i - 1) * self.u
            out.append(DeltaTerm(support, c, trim(target)))
        return out

    def _f_terms(self, lam) -> List[DeltaTerm]:
        out = []
        ell = len(lam)
        for i in range(1, ell + 1):
            li = lam[i - 1]
            d = _part(lam, i + 1) - li
            c = f_prefactor() * FactoredScalar(1, factors=[(Q1 ** d, 1), (Q1 ** (d + 1) * Q3, -1)])
            for j in range(i + 1, ell + 1):
                c = c * _fock_f_factor(lam, i, j)
            for j in (max(ell, i) + 1, max(ell, i) + 2):
                assert _fock_f_factor(lam, i, j).is_one(), "f tail factor is not 1"
            target = add_box(lam, i, -1)
            if not c.is_zero():
                assert is_partition(target), f"f leaves the partitions: {lam} -> {target}"
            support = Q1 ** (li - 1) * Q3 ** (i - 1) * self.u
            out.append(DeltaTerm(support, c, trim(target)))
        return out

    def _psi(self, lam) -> ZFunction:
        ell = len(lam)
        fac = [(Q1 ** (_part(lam, 1) - 1) * Q3 ** -1 * self.u, 1), (Q1 ** _part(lam, 1) * self.u, -1)]
        for i in range(1, ell + 1):
            fac += _fock_psi_factor(lam, i, self.u)
        for i in (ell + 1, ell + 2):
            assert ZFunction(_fock_psi_factor(lam, i, self.u)) == ZFunction(), "psi tail factor is not 1"
        return ZFunction(fac)

    def expected_level(self):
        return ONE, LaurentPoly.monomial(Q2)

    def params(self):
        return {"family": self.family, "u": self.u.to_text()}


def fock_apply(g, lam, u: Monomial = U):
    return FockModule(u).apply(g, trim(lam))


# -- factorized forms -------------------------------------------------------------

def component_psi(lam, i: int, u: Monomial = U) -> ZFunction:
    """Eigenvalue function on the i-th tensor factor [u q2^(1-i)]_(lambda_i - i + 1)."""
    return gamma_fn(_part(lam, i) - i + 1, u * Q2 ** (1 - i))


def psi_empty(u: Monomial = U) -> ZFunction:
    """(1 - q2 u/z)/(1 - u/z): eigenvalue function on the vacuum."""
    return ZFunction([(Q2 * u, 1), (u, -1)])


def _ratio(lam, i: int, u: Monomial) -> ZFunction:
    num = component_psi(lam, i, u)
    den = component_psi((), i, u)
    return num * ZFunction([(a, -e) for a, e in den.factors])


def fock_factorized_check(lam, u: Monomial = U) -> bool:
    """Compare FockModule coefficients with the component-ratio factorized forms.

    psi: psi_empty * prod_i psi_i(lam)/psi_i(vacuum).
    e:   component e-coefficient times prod_{j<i} psi-_j evaluated at the support.
    f:   component f-coefficient times psi_empty(q3^i u/z) times
         prod_{j>i} psi+_j(lam)/psi+_j(vacuum), all evaluated at the support.
    """
    lam = trim(lam)
    F = FockModule(u)
    ell = len(lam)
    z = psi_empty(u)
    for i in range(1, ell + 1):
        z = z * _ratio(lam, i, u)
    for i in (ell + 1, ell + 2):
        assert _ratio(lam, i, u) == ZFunction()
    if z != F.psi(lam):
        return False
    for t in F.e_terms(lam):
        i = next(s for s in range(1, ell + 2) if trim(add_box(lam, s)) == t.target)
        c = e_prefactor()
        for j in range(1, i):
            c = c * component_psi(lam, j, u).value_at(t.support)
        if c.to_scalar() != t.coeff.to_scalar():
            return False
    for t in F.f_terms(lam):
        i = next(s for s in range(1, ell + 1) if trim(add_box(lam, s, -1)) == t.target)
        mu = t.target
        c = f_prefactor() * psi_empty(Q3 ** i * u).value_at(t.support)
        for j in range(i + 1, ell + 3):
            c = c * _ratio(mu, j, u).value_at(t.support)
        if c.to_scalar() != t.coeff.to_scalar():
            return False
    return True
