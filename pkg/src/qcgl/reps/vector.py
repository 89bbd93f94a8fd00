"""Vector representations V(u) and their tensor products."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from ..coeff import FactoredScalar, Monomial, ONE, ZFunction, mono
from .base import DeltaTerm, Module, PoleCollision, Q1, Q2, Q3, e_prefactor, f_prefactor

U = mono(u=1)


def gamma_fn(i: int, u: Monomial = U) -> ZFunction:
    """gamma_{i,u}(z): eigenvalue function of psi+-(z) on [u]_i."""
    a = Q1 ** i * u
    return ZFunction([(Q3 * a, 1), (Q2 * a, 1), (Q1.inverse() * a, -1), (a, -1)])


def gamma_at(i: int, u: Monomial, z0: Monomial) -> FactoredScalar:
    val = gamma_fn(i, u).value_at(z0)
    if val.is_singular():
        raise PoleCollision(f"gamma_({i},{u.to_text()}) has a pole at z = {z0.to_text()}")
    return val


class VectorModule(Module):
    """V(u), basis [u]_i for i in Z."""

    family = "vector"

    def __init__(self, u: Monomial = U):
        super().__init__()
        self.u = u

    def _e_terms(self, i: int) -> List[DeltaTerm]:
        return [DeltaTerm(Q1 ** i * self.u, e_prefactor(), i + 1)]

    def _f_terms(self, i: int) -> List[DeltaTerm]:
        return [DeltaTerm(Q1 ** (i - 1) * self.u, f_prefactor(), i - 1)]

    def _psi(self, i: int) -> ZFunction:
        return gamma_fn(i, self.u)

    def expected_level(self):
        return ONE, ONE

    def params(self):
        return {"family": self.family, "u": self.u.to_text()}


def _is_q1_power(m: Monomial) -> bool:
    return set(m.variables()) <= {"q1"}


class TensorModule(Module):
    """V(u_1) x ... x V(u_N) with the regularized coproduct action.

    With the default symbolic parameters u_1..u_N the generic condition
    u_i/u_j not in q1^Z holds automatically; explicit parameters are checked.
    """

    family = "tensor"

    def __init__(self, us: Sequence[Monomial] | int):
        super().__init__()
        if isinstance(us, int):
            us = [Monomial.var(f"u_{s}") for s in range(1, us + 1)]
        self.us: Tuple[Monomial, ...] = tuple(us)
        self.N = len(self.us)
        for i in range(self.N):
            for j in range(i + 1, self.N):
                if _is_q1_power(self.us[i] / self.us[j]):
                    raise PoleCollision(
                        f"u_{i + 1}/u_{j + 1} = {(self.us[i] / self.us[j]).to_text()} is a power of q1")

    def _e_terms(self, a) -> List[DeltaTerm]:
        out = []
        for s in range(self.N):
            support = Q1 ** a[s] * self.us[s]
            c = e_prefactor()
            for l in range(s):
                c = c * gamma_at(a[l], self.us[l], support)
            target = a[:s] + (a[s] + 1,) + a[s + 1:]
            out.append(DeltaTerm(support, c, target))
        return out

    def _f_terms(self, a) -> List[DeltaTerm]:
        out = []
        for s in range(self.N):
            support = Q1 ** (a[s] - 1) * self.us[s]
            c = f_prefactor()
            for l in range(s + 1, self.N):
                c = c * gamma_at(a[l], self.us[l], support)
            target = a[:s] + (a[s] - 1,) + a[s + 1:]
            out.append(DeltaTerm(support, c, target))
        return out

    def _psi(self, a) -> ZFunction:
        z = ZFunction()
        for s in range(self.N):
            z = z * gamma_fn(a[s], self.us[s])
        return z

    def expected_level(self):
        return ONE, ONE

    def params(self):
        return {"family": self.family, "N": self.N, "u": [u.to_text() for u in self.us]}


def vector_apply(g, i: int, u: Monomial = U):
    return VectorModule(u).apply(g, i)


def tensor_apply(g, a, us):
    return TensorModule(us).apply(g, tuple(a))
