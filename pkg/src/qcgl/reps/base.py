"""Shared machinery for module families: delta terms, state vectors, mode extraction.

A family describes ``e(z)`` and ``f(z)`` on a basis vector as a finite list of
:class:`DeltaTerm` ``c * delta(a/z) |target>``; the mode ``e_m`` then acts by
``c * a^m``.  ``psi+-(z)`` act diagonally by the two expansions of one
rational function of ``z`` (a :class:`ZFunction`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

from ..coeff import (CoeffSum, FS_ONE, FactoredScalar, LaurentPoly, Monomial, ONE, ZFunction, mono)
from ..partition import label_to_json

Q1 = mono(q1=1)
Q3 = mono(q3=1)
Q2 = mono(q2=1)


class PoleCollision(ZeroDivisionError):
    """A rational function was evaluated at one of its poles."""


GENERATOR_KINDS = ("e", "f", "psi+", "psi-")


@dataclass(frozen=True)
class GeneratorMode:
    kind: str
    mode: int

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "psi+" and self.mode < 0:
            raise ValueError("psi+ modes are nonnegative")
        if self.kind == "psi-" and self.mode > 0:
            raise ValueError("psi- modes are nonpositive")

    def __str__(self) -> str:
        return f"{self.kind}[{self.mode}]"


@dataclass(frozen=True)
class DeltaTerm:
    support: Monomial
    coeff: FactoredScalar
    target: Hashable

    def mode_coeff(self, m: int) -> FactoredScalar:
        return self.coeff * self.support ** m


def e_prefactor() -> FactoredScalar:
    """(1 - q1)^-1"""
    return FactoredScalar.binomial(Q1, -1)


def f_prefactor() -> FactoredScalar:
    """-(1 - q1^-1)^-1"""
    return FactoredScalar(-1, factors=[(Q1.inverse(), -1)])


class StateVector:
    """Sparse linear combination of basis labels with CoeffSum coefficients."""

    __slots__ = ("terms", "basis")

    def __init__(self, terms: Optional[Dict[Hashable, CoeffSum]] = None, basis: str = ""):
        self.terms = {} if terms is None else terms
        self.basis = basis

    @classmethod
    def basis_vector(cls, label, basis: str = "") -> "StateVector":
        return cls({label: CoeffSum.of(FactoredScalar())}, basis)

    def add_scaled(self, other: "StateVector", p: LaurentPoly) -> None:
        """In place: self += p * other."""
        for k, v in other.terms.items():
            self.add(k, v.scaled(FS_ONE, p))

    def add(self, label, c: CoeffSum) -> None:
        if label in self.terms:
            self.terms[label] += c
        else:
            self.terms[label] = c.copy()

    def __add__(self, other: "StateVector") -> "StateVector":
        out = StateVector({k: v.copy() for k, v in self.terms.items()}, self.basis or other.basis)
        for k, v in other.terms.items():
            out.add(k, v)
        return out

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + other.scaled(FactoredScalar(-1))

    def scaled(self, f: FactoredScalar, p: LaurentPoly = ONE) -> "StateVector":
        return StateVector({k: v.scaled(f, p) for k, v in self.terms.items()}, self.basis)

    def nonzero_labels(self) -> List[Hashable]:
        return [k for k, v in self.terms.items() if not v.is_zero()]

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.terms.values())

    def coefficient(self, label) -> CoeffSum:
        return self.terms.get(label, CoeffSum())

    def equals(self, other: "StateVector") -> bool:
        return (self - other).is_zero()

    def evaluate(self, values) -> Dict[Hashable, object]:
        return {k: v.evaluate(values) for k, v in self.terms.items()}

    def to_json(self) -> dict:
        items = []
        for k in self.nonzero_labels():
            items.append({"label": label_to_json(k), "coeff": self.terms[k].to_text()})
        items.sort(key=lambda d: json.dumps(d["label"]))
        return {"basis": self.basis, "terms": items}


class Module:
    """Base class of all module families.

    Subclasses implement ``_e_terms``, ``_f_terms`` and ``_psi``.  Results are
    memoized per label; all objects involved are immutable.
    """

    family = "abstract"

    def __init__(self):
        self._ecache: Dict = {}
        self._fcache: Dict = {}
        self._pcache: Dict = {}
        self._modes: Dict = {}
        self._words: Dict = {}

    # -- family hooks ---------------------------------------------------------
    def _e_terms(self, lam) -> List[DeltaTerm]:
        raise NotImplementedError

    def _f_terms(self, lam) -> List[DeltaTerm]:
        raise NotImplementedError

    def _psi(self, lam) -> ZFunction:
        raise NotImplementedError

    def expected_level(self) -> Tuple[LaurentPoly, LaurentPoly]:
        raise NotImplementedError

    def specialize(self, p: LaurentPoly) -> LaurentPoly:
        """Map a parameter polynomial into this module's coefficient field."""
        return p

    def params(self) -> dict:
        return {"family": self.family}

    # -- cached accessors -------------------------------------------------------
    def e_terms(self, lam) -> List[DeltaTerm]:
        if lam not in self._ecache:
            self._ecache[lam] = [t for t in self._e_terms(lam) if not t.coeff.is_zero()]
        return self._ecache[lam]

    def f_terms(self, lam) -> List[DeltaTerm]:
        if lam not in self._fcache:
            self._fcache[lam] = [t for t in self._f_terms(lam) if not t.coeff.is_zero()]
        return self._fcache[lam]

    def psi(self, lam) -> ZFunction:
        if lam not in self._pcache:
            self._pcache[lam] = self._psi(lam)
        return self._pcache[lam]

    def psi_modes(self, lam, order: int) -> Tuple[List[LaurentPoly], List[LaurentPoly]]:
        """(psi+_0..psi+_order, psi-_0..psi-_-order) eigenvalues on ``lam``."""
        hit = self._modes.get(lam)
        if hit is None or len(hit[0]) <= order:
            z = self.psi(lam)
            hit = (z.plus_modes(order), z.minus_modes(order))
            self._modes[lam] = hit
        return hit

    def psi_eigenvalue(self, lam, kind: str, m: int) -> LaurentPoly:
        plus, minus = self.psi_modes(lam, abs(m))
        return plus[m] if kind == "psi+" else minus[-m]

    # -- operators --------------------------------------------------------------
    def apply(self, g: GeneratorMode, vec) -> StateVector:
        """Apply one generator mode to a basis label or a StateVector."""
        if not isinstance(vec, StateVector):
            vec = StateVector.basis_vector(vec, self.family)
        out = StateVector(basis=self.family)
        for lam, c in vec.terms.items():
            if g.kind == "e" or g.kind == "f":
                terms = self.e_terms(lam) if g.kind == "e" else self.f_terms(lam)
                for t in terms:
                    out.add(t.target, c.scaled(t.mode_coeff(g.mode)))
            else:
                ev = self.psi_eigenvalue(lam, g.kind, g.mode)
                if not ev.is_zero():
                    out.add(lam, c.scaled(FactoredScalar(), ev))
        return out

    def apply_word(self, word: Iterable[GeneratorMode], vec) -> StateVector:
        """Apply a product of modes; the rightmost acts first.

        Results on basis labels are memoized per word suffix, so the many
        overlapping words of a relation check share work.  Callers must not
        mutate the returned vector.
        """
        word = tuple(word)
        if isinstance(vec, StateVector):
            for g in reversed(word):
                vec = self.apply(g, vec)
            return vec
        if not word:
            return StateVector.basis_vector(vec, self.family)
        key = (word, vec)
        hit = self._words.get(key)
        if hit is None:
            hit = self.apply(word[0], self.apply_word(word[1:], vec))
            self._words[key] = hit
        return hit

    def clear_caches(self) -> None:
        self._words.clear()
        self._modes.clear()
