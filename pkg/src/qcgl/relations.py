"""Mode-by-mode verification of the defining relations on finite basis windows.

Each relation is written as a finite linear combination of words in the
generator modes (rightmost acts first).  Applying it to a basis vector must
give the zero StateVector, with coefficients compared exactly.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .coeff import LaurentPoly, ONE, Q1, Q2, Q3, Scalar
from .partition import dumps
from .reps.base import GeneratorMode, Module, StateVector

RELATIONS = ("ee", "ff", "psie", "psif", "ef", "serre-e", "serre-f", "level", "psi-commute")

Word = Tuple[GeneratorMode, ...]
Combo = List[Tuple[LaurentPoly, Word]]


@dataclass(frozen=True)
class RelationConstants:
    sigma1: LaurentPoly
    sigma2: LaurentPoly
    g11: LaurentPoly

    @classmethod
    def generic(cls) -> "RelationConstants":
        s1 = Q1 + Q2 + Q3
        s2 = Q1 ** -1 + Q2 ** -1 + Q3 ** -1
        g11 = (ONE - Q1) * (ONE - Q2) * (ONE - Q3)
        # q1 q2 q3 = 1 makes the two forms of sigma2 agree
        assert s2 == Q1 * Q2 + Q2 * Q3 + Q3 * Q1
        return cls(s1, s2, g11)

    def specialized(self, module: Module) -> "RelationConstants":
        return RelationConstants(module.specialize(self.sigma1), module.specialize(self.sigma2),
                                 module.specialize(self.g11))

    def as_scalars(self) -> Dict[str, Scalar]:
        return {"sigma1": Scalar(self.sigma1), "sigma2": Scalar(self.sigma2), "g11": Scalar(self.g11)}


@dataclass
class CheckSpec:
    module: Module
    relation: str
    mode_window: int = 2
    basis: Sequence = ()
    series_order: Optional[int] = None

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        if self.series_order is None:
            self.series_order = self.mode_window + 3
        if self.series_order < self.mode_window + 3:
            raise ValueError("series order must be at least mode window + 3")


@dataclass
class Report:
    suite: str
    params: dict = field(default_factory=dict)
    cases: List[dict] = field(default_factory=list)
    seconds: float = 0.0

    def add(self, cid: str, status: str, detail: str = "") -> None:
        self.cases.append({"id": cid, "status": status, "detail": detail})

    def extend(self, other: "Report") -> None:
        self.cases.extend(other.cases)
        self.seconds += other.seconds

    @property
    def summary(self) -> Dict[str, int]:
        out = {"pass": 0, "fail": 0, "error": 0}
        for c in self.cases:
            out[c["status"]] += 1
        return out

    @property
    def passed(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["error"] == 0

    def failures(self) -> List[dict]:
        return [c for c in self.cases if c["status"] != "pass"]

    def to_json(self) -> dict:
        return {"suite": self.suite, "params": self.params, "cases": self.cases,
                "summary": self.summary, "seconds": round(self.seconds, 3)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


# -- words --------------------------------------------------------------------------

def E(m):
    return GeneratorMode("e", m)


def F(m):
    return GeneratorMode("f", m)


def _psi(kind: str, a: int) -> Optional[GeneratorMode]:
    if (kind == "psi+" and a < 0) or (kind == "psi-" and a > 0):
        return None
    return GeneratorMode(kind, a)


def _cubic(C: RelationConstants) -> List[Tuple[int, LaurentPoly]]:
    """Coefficients of g(z, w) = sum_p c_p z^(3-p) w^p."""
    return [(0, ONE), (1, -C.sigma1), (2, C.sigma2), (3, -ONE)]


def ee_half(n: int, m: int, C: RelationConstants, x=E) -> Combo:
    """Component z^-n w^-m of g(z,w) x(z) x(w)."""
    return [(c, (x(n + 3 - p), x(m + p))) for p, c in _cubic(C)]


def ee_combo(n: int, m: int, C: RelationConstants) -> Combo:
    return ee_half(n, m, C) + ee_half(m, n, C)


def ff_half(n: int, m: int, C: RelationConstants) -> Combo:
    """Component z^-n w^-m of g(w,z) f(z) f(w)."""
    return [(c, (F(n + p), F(m + 3 - p))) for p, c in _cubic(C)]


def ff_combo(n: int, m: int, C: RelationConstants) -> Combo:
    return ff_half(n, m, C) + ff_half(m, n, C)


def psie_combo(kind: str, i: int, j: int, C: RelationConstants) -> Combo:
    out = []
    for p, c in _cubic(C):
        a = _psi(kind, i + 3 - p)
        if a is not None:
            out.append((c, (a, E(j + p))))
        b = _psi(kind, i + p)
        if b is not None:
            out.append((c, (E(j + 3 - p), b)))
    return out


def psif_combo(kind: str, i: int, j: int, C: RelationConstants) -> Combo:
    out = []
    for p, c in _cubic(C):
        a = _psi(kind, i + p)
        if a is not None:
            out.append((c, (a, F(j + 3 - p))))
        b = _psi(kind, i + 3 - p)
        if b is not None:
            out.append((c, (F(j + p), b)))
    return out


def ef_combo(i: int, j: int, C: RelationConstants) -> Combo:
    out = [(C.g11, (E(i), F(j))), (-C.g11, (F(j), E(i)))]
    s = i + j
    if s >= 0:
        out.append((-ONE, (GeneratorMode("psi+", s),)))
    if s <= 0:
        out.append((ONE, (GeneratorMode("psi-", s),)))
    return out


def serre_combo(x=E) -> Combo:
    return [(ONE, (x(0), x(1), x(-1))), (-ONE, (x(0), x(-1), x(1))),
            (-ONE, (x(1), x(-1), x(0))), (ONE, (x(-1), x(1), x(0)))]


def evaluate_combo(module: Module, combo: Combo, v) -> StateVector:
    out = StateVector(basis=module.family)
    for c, word in combo:
        out.add_scaled(module.apply_word(word, v), c)
    return out


# -- numeric prescreen -------------------------------------------------------------

_NUMERIC_VARS = ("q1", "q3", "u", "p") + tuple(f"u_{s}" for s in range(1, 9))


def random_point(seed: int) -> Dict[str, Fraction]:
    """Random rationals; small primes as numerators keep multiplicative relations unlikely."""
    rng = random.Random(seed)
    primes = [101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173]
    rng.shuffle(primes)
    return {v: Fraction(primes[k], rng.choice([7, 11, 13, 17, 19, 23])) for k, v in enumerate(_NUMERIC_VARS)}


def _zero_numeric(vec: StateVector, point) -> bool:
    return all(c.evaluate(point) == 0 for c in vec.terms.values())


# -- checks -----------------------------------------------------------------------

class _Runner:
    def __init__(self, module: Module, basis: Sequence, suite: str, numeric_seed: Optional[int] = None,
                 params: Optional[dict] = None):
        self.module = module
        self.basis = list(basis)
        self.C = RelationConstants.generic().specialized(module)
        self.report = Report(suite, dict(params or module.params()))
        self.point = None if numeric_seed is None else random_point(numeric_seed)
        if self.point is not None:
            self.report.params["qmode"] = f"numeric:{numeric_seed}"

    def residual_case(self, cid: str, combo: Combo, v, extra: Optional[Callable[[], Optional[str]]] = None):
        try:
            res = evaluate_combo(self.module, combo, v)
            if self.point is not None:
                try:
                    ok = _zero_numeric(res, self.point)
                except ZeroDivisionError:
                    ok = False
                if not ok:
                    ok = res.is_zero()
            else:
                ok = res.is_zero()
            detail = ""
            if ok and extra is not None:
                bad = extra()
                if bad:
                    ok, detail = False, bad
            elif not ok:
                detail = json.dumps(res.to_json()["terms"][:3])
            self.report.add(cid, "pass" if ok else "fail", detail)
        except Exception as exc:  # reported, not raised
            self.report.add(cid, "error", f"{type(exc).__name__}: {exc}")

    def label(self, v) -> str:
        return dumps(v)


def _window(W: int) -> range:
    return range(-W, W + 1)


def check_ee(spec: CheckSpec, numeric_seed=None) -> Report:
    R = _Runner(spec.module, spec.basis, "ee", numeric_seed)
    C = R.C
    for v in R.basis:
        for n in _window(spec.mode_window):
            for m in _window(spec.mode_window):
                def antisym(n=n, m=m, v=v):
                    # right side computed from g(w,z) directly must equal -(left side with n, m swapped)
                    rhs = [(-c, (E(m + 3 - p), E(n + p))) for p, c in _cubic(C)]
                    lhs_swapped = ee_half(m, n, C)
                    d = evaluate_combo(R.module, rhs + lhs_swapped, v)
                    return None if d.is_zero() else "antisymmetrization mismatch"
                R.residual_case(f"ee n={n} m={m} v={R.label(v)}", ee_combo(n, m, C), v, antisym)
    return R.report


def check_ff(spec: CheckSpec, numeric_seed=None) -> Report:
    R = _Runner(spec.module, spec.basis, "ff", numeric_seed)
    for v in R.basis:
        for n in _window(spec.mode_window):
            for m in _window(spec.mode_window):
                R.residual_case(f"ff n={n} m={m} v={R.label(v)}", ff_combo(n, m, R.C), v)
    return R.report


def _psi_indices(kind: str, W: int) -> range:
    return range(-3, W + 1) if kind == "psi+" else range(-W - 3, 1)


def check_psie(spec: CheckSpec, numeric_seed=None) -> Report:
    R = _Runner(spec.module, spec.basis, "psie", numeric_seed)
    for v in R.basis:
        for kind in ("psi+", "psi-"):
            for i in _psi_indices(kind, spec.mode_window):
                for j in _window(spec.mode_window):
                    R.residual_case(f"{kind}e i={i} j={j} v={R.label(v)}", psie_combo(kind, i, j, R.C), v)
    return R.report


def check_psif(spec: CheckSpec, numeric_seed=None) -> Report:
    R = _Runner(spec.module, spec.basis, "psif", numeric_seed)
    for v in R.basis:
        for kind in ("psi+", "psi-"):
            for i in _psi_indices(kind, spec.mode_window):
                for j in _window(spec.mode_window):
                    R.residual_case(f"{kind}f i={i} j={j} v={R.label(v)}", psif_combo(kind, i, j, R.C), v)
    return R.report


def check_ef(spec: CheckSpec, numeric_seed=None) -> Report:
    R = _Runner(spec.module, spec.basis, "ef", numeric_seed)
    for v in R.basis:
        for i in _window(spec.mode_window):
            for j in _window(spec.mode_window):
                R.residual_case(f"ef i={i} j={j} v={R.label(v)}", ef_combo(i, j, R.C), v)
    return R.report


def check_serre(spec: CheckSpec, numeric_seed=None) -> Report:
    R = _Runner(spec.module, spec.basis, "serre", numeric_seed)
    for v in R.basis:
        R.residual_case(f"serre-e v={R.label(v)}", serre_combo(E), v)
        R.residual_case(f"serre-f v={R.label(v)}", serre_combo(F), v)
    return R.report


def check_level_and_central(spec: CheckSpec, numeric_seed=None) -> Report:
    R = _Runner(spec.module, spec.basis, "level", numeric_seed)
    M = spec.module
    lp, lm = M.expected_level()
    W = spec.mode_window
    for v in R.basis:
        try:
            got = (M.psi_eigenvalue(v, "psi+", 0), M.psi_eigenvalue(v, "psi-", 0))
            ok = got[0] == lp and got[1] == lm
            R.report.add(f"level v={R.label(v)}", "pass" if ok else "fail",
                         "" if ok else f"got ({got[0].to_text()}, {got[1].to_text()})")
        except Exception as exc:
            R.report.add(f"level v={R.label(v)}", "error", f"{type(exc).__name__}: {exc}")
        for kind in ("psi+", "psi-"):
            z = GeneratorMode(kind, 0)
            for m in _window(W):
                for x in (E(m), F(m)):
                    R.residual_case(f"central {kind}[0] {x} v={R.label(v)}",
                                    [(ONE, (z, x)), (-ONE, (x, z))], v)
        for a in range(0, W + 1):
            for b in range(-W, 1):
                P, Mn = GeneratorMode("psi+", a), GeneratorMode("psi-", b)
                R.residual_case(f"psi-commute +{a} {b} v={R.label(v)}", [(ONE, (P, Mn)), (-ONE, (Mn, P))], v)
    return R.report


CHECKS = {
    "ee": check_ee, "ff": check_ff, "psie": check_psie, "psif": check_psif, "ef": check_ef,
    "serre": check_serre, "level": check_level_and_central,
}


def run_suite(module: Module, basis: Iterable, mode_window: int = 2, relations: Sequence[str] = tuple(CHECKS),
              numeric_seed: Optional[int] = None, suite: Optional[str] = None,
              series_order: Optional[int] = None) -> Report:
    """Run the named checks on every basis vector and aggregate one Report."""
    t0 = time.perf_counter()
    basis = list(basis)
    params = dict(module.params())
    params.update({"mode_window": mode_window, "basis_size": len(basis), "relations": list(relations),
                   "series_order": series_order if series_order is not None else mode_window + 3})
    out = Report(suite or f"{module.family}-relations", params)
    for rel in relations:
        name = "level" if rel in ("level", "psi-commute") else rel
        name = "serre" if rel in ("serre-e", "serre-f") else name
        spec = CheckSpec(module, name if name in RELATIONS else "serre-e", mode_window, basis, series_order)
        out.extend(CHECKS[name](spec, numeric_seed))
    if numeric_seed is not None:
        out.params["qmode"] = f"numeric:{numeric_seed}"
    out.seconds = time.perf_counter() - t0
    return out
