"""Named verification suites, one per acceptance criterion.

Every function returns a :class:`~qcgl.relations.Report`.  Defaults are the
acceptance windows, so ``qcgl verify --all`` reproduces the acceptance run.
"""

from __future__ import annotations

import itertools
import random
import time
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from .coeff import FS_ONE, CoeffSum, LaurentPoly, ZFunction, delta_residues, mono
from .daha import check_cocycles, check_identification, check_mode_recursion
from .macdonald import macdonald_P_laurent, wheel_vanishes
from .partition import (TailSpec, TailedPartition, all_tail_specs, enumerate_nonneg, enumerate_tailed,
                        enumerate_zvalued, is_admissible)
from .relations import Report, run_suite
from .reps import (FockModule, GeneratorMode, PoleCollision, ResonanceModule, StateVector, TensorModule,
                   VectorModule, WNModule, fock_factorized_check)
from .reps.base import Q1

ALL_RELATIONS = ("ee", "ff", "psie", "psif", "ef", "serre", "level")
RESONANCE_RELATIONS = ("ee", "ff", "ef", "serre", "level")
RESONANCE_PAIRS = ((1, 2), (2, 2), (2, 3))


def _timed(rep: Report, start: float) -> Report:
    rep.seconds = time.perf_counter() - start
    return rep


def _merge(name: str, params: dict, parts: Iterable[Report]) -> Report:
    start = time.perf_counter()
    out = Report(name, params)
    for p in parts:
        for c in p.cases:
            out.cases.append(dict(c, id=f"{p.suite}: {c['id']}"))
    return _timed(out, start)


# 1 ------------------------------------------------------------------------------

def vector_suite(mode_window: int = 3, entry_window: int = 3, numeric_seed: Optional[int] = None) -> Report:
    basis = range(-entry_window, entry_window + 1)
    return run_suite(VectorModule(), basis, mode_window, ALL_RELATIONS, numeric_seed, suite="vector")


# 2 ------------------------------------------------------------------------------

def pole_collision_case() -> Report:
    rep = Report("tensor-pole-collision", {"u": ["u", "q1*u"]})
    u = mono(u=1)
    try:
        TensorModule([u, Q1 * u])
    except PoleCollision as exc:
        rep.add("u2 = q1 u1 raises PoleCollision", "pass", str(exc))
    else:
        rep.add("u2 = q1 u1 raises PoleCollision", "fail", "no exception")
    return rep


def tensor_suite(N: int, mode_window: int = 3, entry_window: int = 2, numeric_seed: Optional[int] = None,
                 limit: Optional[int] = None) -> Report:
    basis = list(itertools.product(range(-entry_window, entry_window + 1), repeat=N))
    if limit is not None:
        basis = basis[:limit]
    return run_suite(TensorModule(N), basis, mode_window, ALL_RELATIONS, numeric_seed, suite=f"tensor-N{N}")


# 3 ------------------------------------------------------------------------------

def wn_suite(N: int, mode_window: int = 2, lo: int = -2, hi: int = 3, numeric_seed: Optional[int] = None) -> Report:
    return run_suite(WNModule(N), enumerate_zvalued(N, lo, hi), mode_window, ALL_RELATIONS, numeric_seed,
                     suite=f"wn-N{N}")


# 4 ------------------------------------------------------------------------------

def _mapped(vec: StateVector, f: Callable) -> StateVector:
    out = StateVector(basis=vec.basis)
    for lam, c in vec.terms.items():
        out.add(f(lam), c)
    return out


def _all_modes(mode_window: int) -> List[GeneratorMode]:
    out = [GeneratorMode(k, m) for k in ("e", "f") for m in range(-mode_window, mode_window + 1)]
    out += [GeneratorMode("psi+", m) for m in range(mode_window + 1)]
    out += [GeneratorMode("psi-", -m) for m in range(mode_window + 1)]
    return out


def ind_stability(N: int, max_weight: int = 5, mode_window: int = 3) -> Report:
    """W^(N,+) against W^(N+1,+) (modified operators) under lambda -> (lambda, 0), for lambda_N = 0."""
    start = time.perf_counter()
    rep = Report(f"ind-N{N}", {"N": N, "max_weight": max_weight, "mode_window": mode_window})
    small, big = WNModule(N, modified="fock"), WNModule(N + 1, modified="fock")
    tau = lambda lam: tuple(lam) + (0,)
    for lam in enumerate_nonneg(max_weight, max_len=N - 1):
        lam = tuple(lam) + (0,) * (N - len(lam))
        for g in _all_modes(mode_window):
            lhs = _mapped(small.apply(g, lam), tau)
            ok = lhs.equals(big.apply(g, tau(lam)))
            rep.add(f"{g} on {list(lam)}", "pass" if ok else "fail")
    return _timed(rep, start)


def factorized_suite(max_weight: int = 6) -> Report:
    start = time.perf_counter()
    rep = Report("fock-factorized", {"max_weight": max_weight})
    for lam in enumerate_nonneg(max_weight):
        rep.add(f"{list(lam)}", "pass" if fock_factorized_check(lam) else "fail")
    return _timed(rep, start)


def fock_suite(max_weight: int = 6, mode_window: int = 3, ind_N: Sequence[int] = (3, 4, 5),
               ind_weight: int = 5, numeric_seed: Optional[int] = None) -> Report:
    parts = [run_suite(FockModule(), enumerate_nonneg(max_weight), mode_window, ALL_RELATIONS, numeric_seed,
                       suite="fock"),
             factorized_suite(max_weight)]
    parts += [ind_stability(N, ind_weight, mode_window) for N in ind_N]
    return _merge("fock-all", {"max_weight": max_weight, "mode_window": mode_window, "ind_N": list(ind_N)}, parts)


# 5, 6, 9 ----------------------------------------------------------------------------

def macdonald_suite(max_N: int = 3, max_weight: int = 5) -> Report:
    parts = [check_identification(N, max_weight) for N in range(1, max_N + 1)]
    return _merge("macdonald", {"max_N": max_N, "max_weight": max_weight}, parts)


def daha_suite(mode_window: int = 2, fock_weight: int = 3, entry_window: int = 3) -> Report:
    parts = [check_mode_recursion(VectorModule(), range(-entry_window, entry_window + 1), mode_window),
             check_mode_recursion(FockModule(), enumerate_nonneg(fock_weight), mode_window)]
    return _merge("daha-recursion", {"mode_window": mode_window, "fock_weight": fock_weight}, parts)


def cocycle_suite(max_weight: int = 4) -> Report:
    return check_cocycles(max_weight)


# 7 ------------------------------------------------------------------------------

def _res_closure_and_boundary(M: ResonanceModule, basis: List[TailedPartition]) -> Report:
    start = time.perf_counter()
    spec = M.spec
    rep = Report(f"resonance-closure {spec}", {})
    for lam in basis:
        for t in M.e_terms(lam) + M.f_terms(lam):
            tgt = t.target
            ok = (is_admissible(tgt, spec.k, spec.r) and tgt.is_weakly_decreasing()
                  and all(tgt[j] >= spec.value(j) for j in range(1, tgt.stab + spec.k + 1)))
            rep.add(f"{lam} -> {tgt}", "pass" if ok else "fail")
        for i in range(1, lam.stab + 2):
            if lam[i] - lam[i + spec.k] == spec.r:
                c = M.e_coefficient(lam, i + spec.k)
                rep.add(f"<lambda+1_{i + spec.k}|e|lambda> = 0 at {lam}", "pass" if c.is_zero() else "fail")
    return _timed(rep, start)


def pkr_stability(spec: TailSpec, max_excess: int = 5, mode_window: int = 2) -> Report:
    """W^(k,N) against W^(k,N+k) under one tail period, and both against the limit module."""
    start = time.perf_counter()
    rep = Report(f"pkr {spec}", {"mode_window": mode_window})
    R = ResonanceModule(spec)
    k = spec.k
    modules: Dict[int, WNModule] = {}

    def wn(n):
        if n not in modules:
            modules[n] = WNModule(n, modified=spec)
        return modules[n]

    for lam in enumerate_tailed(spec, max_excess):
        N = lam.stab + k
        small, big = wn(N), wn(N + k)
        tau = lambda mu: tuple(mu) + spec.head(N + k)[N:]
        for g in _all_modes(mode_window):
            a = small.apply(g, lam.parts(N))
            b = big.apply(g, lam.parts(N + k))
            lim = _mapped(R.apply(g, lam), lambda mu: mu.parts(N))
            ok = _mapped(a, tau).equals(b) and lim.equals(a)
            rep.add(f"{g} on {lam}", "pass" if ok else "fail")
    return _timed(rep, start)


def resonance_spec_suite(spec: TailSpec, max_excess: int = 5, mode_window: int = 2,
                         numeric_seed: Optional[int] = None) -> Report:
    M = ResonanceModule(spec)
    basis = enumerate_tailed(spec, max_excess)
    parts = [_res_closure_and_boundary(M, basis),
             pkr_stability(spec, max_excess, mode_window),
             run_suite(M, basis, mode_window, RESONANCE_RELATIONS, numeric_seed, suite=f"resonance {spec}")]
    return _merge(f"resonance {spec}", {"k": spec.k, "r": spec.r, "c": list(spec.c)}, parts)


def resonance_suite(pairs=RESONANCE_PAIRS, max_excess: int = 5, mode_window: int = 2,
                    numeric_seed: Optional[int] = None) -> Report:
    parts = [resonance_spec_suite(s, max_excess, mode_window, numeric_seed)
             for k, r in pairs for s in all_tail_specs(k, r)]
    return _merge("resonance", {"pairs": [list(p) for p in pairs], "max_excess": max_excess}, parts)


# 8 ------------------------------------------------------------------------------

def wheel_suite(pairs=((1, 2), (2, 3)), max_weight: int = 5) -> Report:
    start = time.perf_counter()
    rep = Report("wheel", {"pairs": [list(p) for p in pairs], "max_weight": max_weight})
    for k, r in pairs:
        N = k + 1
        for lam in enumerate_nonneg(max_weight, max_len=N):
            lam = tuple(lam) + (0,) * (N - len(lam))
            if not is_admissible(lam, k, r):
                continue
            ok = wheel_vanishes(macdonald_P_laurent(lam, N), k, r)
            rep.add(f"(k,r)=({k},{r}) P{list(lam)}", "pass" if ok else "fail")
    return _timed(rep, start)


# 10 -----------------------------------------------------------------------------

def random_zfunction(rng: random.Random, n_factors: int = 4) -> ZFunction:
    """A random product of n binomials in u/z with distinct simple poles, regular at 0 and infinity."""
    while True:
        args = {mono(q1=rng.randint(-3, 3), q3=rng.randint(-3, 3), u=rng.randint(0, 2)) for _ in range(n_factors)}
        if len(args) == n_factors:
            break
    args = sorted(args, key=lambda m: m.to_text())
    n_poles = rng.randint((n_factors + 1) // 2, n_factors)
    exps = [-1] * n_poles + [1] * (n_factors - n_poles)
    rng.shuffle(exps)
    s = sum(exps)
    zpow = rng.randint(s, 0)
    return ZFunction(list(zip(args, exps)), coef=rng.choice([1, -1, 2, 3]), zpow=zpow)


def sp_identity(f: ZFunction, order: int = 6) -> bool:
    """f_+(z) - f_-(z) = sum over poles a of res_a(f dz/z) delta(a/z), modes |m| <= order."""
    plus, minus = f.plus_modes(order), f.minus_modes(order)
    res = delta_residues(f)
    for m in range(-order, order + 1):
        lhs = (plus[m] if m >= 0 else LaurentPoly()) - (minus[-m] if m <= 0 else LaurentPoly())
        total = CoeffSum.of(FS_ONE, -lhs)
        for a, r in res:
            total.add_term(r * a ** m)
        if not total.is_zero():
            return False
    return True


def sp_suite(count: int = 100, order: int = 6, seed: int = 0) -> Report:
    start = time.perf_counter()
    rep = Report("series-residue", {"count": count, "order": order, "seed": seed})
    rng = random.Random(seed)
    for n in range(count):
        f = random_zfunction(rng)
        rep.add(f"#{n} {f.to_text()}", "pass" if sp_identity(f, order) else "fail")
    return _timed(rep, start)


def tensor_criterion(numeric_seed: Optional[int] = None) -> Report:
    parts = [tensor_suite(2, numeric_seed=numeric_seed), tensor_suite(3, numeric_seed=numeric_seed),
             pole_collision_case()]
    return _merge("tensor", {"N": [2, 3]}, parts)


def wn_criterion(numeric_seed: Optional[int] = None) -> Report:
    return _merge("wn", {"N": [2, 3]}, [wn_suite(2, numeric_seed=numeric_seed), wn_suite(3, numeric_seed=numeric_seed)])


ACCEPTANCE: Dict[int, Callable[[], Report]] = {
    1: vector_suite,
    2: tensor_criterion,
    3: wn_criterion,
    4: fock_suite,
    5: macdonald_suite,
    6: daha_suite,
    7: resonance_suite,
    8: wheel_suite,
    9: cocycle_suite,
    10: sp_suite,
}

TITLES = {
    1: "vector module relations",
    2: "tensor products N=2,3",
    3: "W^N submodules N=2,3",
    4: "Fock module",
    5: "Macdonald cross-check",
    6: "DAHA mode recursion",
    7: "resonance modules",
    8: "wheel condition",
    9: "c_lambda cocycle",
    10: "series minus residues",
}
