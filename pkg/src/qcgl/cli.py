"""Command-line driver.

Exit status: 0 when every case passes, 1 on any fail/error case, 2 on an
invalid configuration.
"""

from __future__ import annotations

import itertools
import json
import sys
from typing import Optional, Sequence

import click

from . import suites
from .coeff import UnsupportedResonance, check_pair
from .daha import check_cocycles, check_identification
from .macdonald import macdonald_P_laurent
from .partition import TailSpec, all_tail_specs, enumerate_nonneg, enumerate_tailed, enumerate_zvalued
from .relations import Report, run_suite
from .reps import FockModule, GeneratorMode, ResonanceModule, TensorModule, VectorModule, WNModule
from .reps.vector import U, gamma_fn

MODULES = ("vector", "tensor", "wn", "fock", "resonance")


class ConfigError(click.UsageError):
    """Invalid configuration (exit status 2)."""


def _ints(text: Optional[str]) -> tuple:
    if text is None or not text.strip():
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise ConfigError(f"expected comma-separated integers, got {text!r}")


def _qmode(text: str) -> Optional[int]:
    if text == "symbolic":
        return None
    kind, _, seed = text.partition(":")
    if kind != "numeric" or not seed.lstrip("-").isdigit():
        raise ConfigError(f"--qmode must be 'symbolic' or 'numeric:<seed>', got {text!r}")
    return int(seed)


def _tail_spec(k: int, r: int, c: Optional[str]) -> TailSpec:
    try:
        check_pair(k, r)
        cvec = _ints(c) if c is not None else (0,) * (k - 1)
        return TailSpec(k, r, cvec)
    except (UnsupportedResonance, ValueError) as exc:
        raise ConfigError(str(exc))


def _check_window(mode_window: int, series_order: Optional[int]) -> None:
    if mode_window < 0:
        raise ConfigError("--mode-window must be nonnegative")
    if series_order is not None and series_order < mode_window + 3:
        raise ConfigError("--series-order must be at least mode window + 3")


def _finish(reports: Sequence[Report], out: Optional[str], timing: bool = True) -> None:
    lines = []
    ok = True
    for rep in reports:
        if not timing:
            rep.seconds = 0.0
        s = rep.summary
        ok &= rep.passed
        lines.append(f"{'PASS' if rep.passed else 'FAIL'} {rep.suite}: "
                     f"{s['pass']} pass, {s['fail']} fail, {s['error']} error")
        for c in rep.failures()[:5]:
            lines.append(f"  {c['status']}: {c['id']} {c['detail']}".rstrip())
    if out:
        payload = reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports]
        with open(out, "w") as fh:
            json.dump(payload, fh, indent=1)
            fh.write("\n")
    click.echo("\n".join(lines))
    sys.exit(0 if ok else 1)


# -- options shared by the suite commands --------------------------------------------

def _window_options(f):
    f = click.option("--mode-window", type=int, default=None, help="Largest |mode| used in relation checks.")(f)
    f = click.option("--series-order", type=int, default=None, help="psi-series order K (at least W+3).")(f)
    f = click.option("--qmode", default="symbolic", show_default=True,
                     help="'symbolic', or 'numeric:<seed>' to prescreen at a random rational point.")(f)
    f = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON report here.")(f)
    f = click.option("--no-timing", is_flag=True, help="Record seconds as 0 for byte-identical reports.")(f)
    return f


@click.group()
def main():
    """Exact verification of quantum continuous gl_infinity modules."""


@main.command()
@click.option("--module", "family", type=click.Choice(MODULES), default=None)
@click.option("--N", "N", type=int, default=None, help="Tensor factors or W^N rank.")
@click.option("--max-weight", type=int, default=None, help="Largest |lambda| (Fock) or excess over the tail (resonance).")
@click.option("--entry-window", type=int, default=None, help="Vector/tensor basis entries in [-w, w].")
@click.option("--k", type=int, default=None)
@click.option("--r", type=int, default=None)
@click.option("--c", default=None, help="Comma-separated c-vector (resonance).")
@click.option("--all", "run_all", is_flag=True, help="Run every acceptance suite with its default windows.")
@_window_options
def verify(family, N, max_weight, entry_window, k, r, c, run_all, mode_window, series_order, qmode, out, no_timing):
    """Check the defining relations on a module family."""
    seed = _qmode(qmode)
    if run_all:
        if family is not None:
            raise ConfigError("--all runs every suite; drop --module")
        reports = [suites.ACCEPTANCE[n]() for n in sorted(suites.ACCEPTANCE)]
        _finish(reports, out, not no_timing)
    if family is None:
        raise ConfigError("give --module or --all")
    if family == "vector":
        W = 3 if mode_window is None else mode_window
        _check_window(W, series_order)
        e = 3 if entry_window is None else entry_window
        rep = run_suite(VectorModule(), range(-e, e + 1), W, suites.ALL_RELATIONS, seed, "vector", series_order)
    elif family == "tensor":
        W = 3 if mode_window is None else mode_window
        _check_window(W, series_order)
        e = 2 if entry_window is None else entry_window
        n = 2 if N is None else N
        if n < 1:
            raise ConfigError("--N must be positive")
        basis = list(itertools.product(range(-e, e + 1), repeat=n))
        rep = run_suite(TensorModule(n), basis, W, suites.ALL_RELATIONS, seed, f"tensor-N{n}", series_order)
    elif family == "wn":
        W = 2 if mode_window is None else mode_window
        _check_window(W, series_order)
        n = 2 if N is None else N
        if n < 1:
            raise ConfigError("--N must be positive")
        rep = run_suite(WNModule(n), enumerate_zvalued(n, -2, 3), W, suites.ALL_RELATIONS, seed, f"wn-N{n}",
                        series_order)
    elif family == "fock":
        W = 3 if mode_window is None else mode_window
        _check_window(W, series_order)
        mw = 6 if max_weight is None else max_weight
        rep = run_suite(FockModule(), enumerate_nonneg(mw), W, suites.ALL_RELATIONS, seed, "fock", series_order)
    else:
        if k is None or r is None:
            raise ConfigError("resonance needs --k and --r")
        spec = _tail_spec(k, r, c)
        W = 2 if mode_window is None else mode_window
        _check_window(W, series_order)
        mw = 5 if max_weight is None else max_weight
        rep = run_suite(ResonanceModule(spec), enumerate_tailed(spec, mw), W, suites.RESONANCE_RELATIONS, seed,
                        f"resonance {spec}", series_order)
    _finish([rep], out, not no_timing)


@main.command()
@click.option("--max-weight", type=int, default=6, show_default=True)
@click.option("--ind-N", "ind_N", default="3,4,5", show_default=True, help="Ranks for the stability check.")
@_window_options
def fock(max_weight, ind_N, mode_window, series_order, qmode, out, no_timing):
    """Fock module: relations, factorized psi and stability under W^N -> W^(N+1)."""
    W = 3 if mode_window is None else mode_window
    _check_window(W, series_order)
    rep = suites.fock_suite(max_weight, W, _ints(ind_N), numeric_seed=_qmode(qmode))
    _finish([rep], out, not no_timing)


@main.command()
@click.option("--N", "N", type=int, default=2, show_default=True)
@click.option("--entry-window", default="-2,3", show_default=True, help="lo,hi for the entries of lambda.")
@_window_options
def wn(N, entry_window, mode_window, series_order, qmode, out, no_timing):
    """W^N(u): relations on weakly decreasing lambda in Z^N."""
    W = 2 if mode_window is None else mode_window
    _check_window(W, series_order)
    bounds = _ints(entry_window)
    if len(bounds) != 2 or bounds[0] > bounds[1] or N < 1:
        raise ConfigError("--entry-window takes lo,hi with lo <= hi, and --N must be positive")
    rep = run_suite(WNModule(N), enumerate_zvalued(N, *bounds), W, suites.ALL_RELATIONS, _qmode(qmode),
                    f"wn-N{N}", series_order)
    _finish([rep], out, not no_timing)


@main.command()
@click.option("--N", "N", type=int, default=2, show_default=True)
@click.option("--shape", default=None, help="Comma-separated lambda (negative parts allowed).")
@click.option("--print", "do_print", is_flag=True, help="Print P_lambda in the monomial basis.")
@click.option("--max-weight", type=int, default=5, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--no-timing", is_flag=True)
def macdonald(N, shape, do_print, max_weight, out, no_timing):
    """Macdonald polynomials, or (without --shape) the cross-check against W^N."""
    if N < 1:
        raise ConfigError("--N must be positive")
    if shape is not None:
        lam = _ints(shape)
        if len(lam) > N:
            raise ConfigError(f"shape has more than {N} parts")
        lam = lam + (0,) * (N - len(lam))
        if any(a < b for a, b in zip(lam, lam[1:])):
            raise ConfigError("shape must be weakly decreasing")
        P = macdonald_P_laurent(lam, N)
        if out:
            with open(out, "w") as fh:
                fh.write(P.dumps() + "\n")
        if do_print or not out:
            click.echo(P.to_text())
        sys.exit(0)
    reports = [check_identification(n, max_weight) for n in range(1, N + 1)]
    _finish(reports, out, not no_timing)


@main.command()
@click.option("--k", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--c", default=None, help="Comma-separated c-vector; omitted means every valid c.")
@click.option("--max-weight", type=int, default=5, show_default=True, help="Excess over the tail.")
@_window_options
def resonance(k, r, c, max_weight, mode_window, series_order, qmode, out, no_timing):
    """Resonance modules W^(k,r)_c: closure, boundary zeros, stability and relations."""
    try:
        check_pair(k, r)
    except (UnsupportedResonance, ValueError) as exc:
        raise ConfigError(str(exc))
    W = 2 if mode_window is None else mode_window
    _check_window(W, series_order)
    specs = [_tail_spec(k, r, c)] if c is not None else all_tail_specs(k, r)
    reports = [suites.resonance_spec_suite(s, max_weight, W, _qmode(qmode)) for s in specs]
    _finish(reports, out, not no_timing)


@main.command()
@click.option("--N", "N", type=int, default=3, show_default=True, help="Largest rank in the identification.")
@click.option("--max-weight", type=int, default=5, show_default=True)
@click.option("--mode-window", type=int, default=2, show_default=True)
@click.option("--cocycle-weight", type=int, default=4, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--no-timing", is_flag=True)
def daha(N, max_weight, mode_window, cocycle_weight, out, no_timing):
    """Polynomial-representation identification, mode recursion and c_lambda cocycles."""
    if N < 1 or mode_window < 0:
        raise ConfigError("--N must be positive and --mode-window nonnegative")
    reports = [check_identification(n, max_weight) for n in range(1, N + 1)]
    reports.append(suites.daha_suite(mode_window))
    reports.append(check_cocycles(cocycle_weight))
    _finish(reports, out, not no_timing)


PRINT_KINDS = ("gamma", "fock-row", "tail", "macdonald")


@main.command("print")
@click.argument("kind", type=click.Choice(PRINT_KINDS))
@click.option("--i", "index", type=int, default=0, show_default=True, help="gamma: the basis index.")
@click.option("--shape", default="", help="fock-row / macdonald: comma-separated lambda.")
@click.option("--generator", type=click.Choice(["e", "f", "psi+", "psi-"]), default="e", show_default=True)
@click.option("--modes", default="-1,1", show_default=True, help="fock-row: lo,hi mode range.")
@click.option("--k", type=int, default=1)
@click.option("--r", type=int, default=2)
@click.option("--c", default=None)
@click.option("--entries", type=int, default=6, show_default=True, help="tail: how many entries.")
@click.option("--N", "N", type=int, default=2, show_default=True)
def print_cmd(kind, index, shape, generator, modes, k, r, c, entries, N):
    """Render an object in canonical text."""
    click.echo(print_object(kind, index=index, shape=_ints(shape), generator=generator, modes=_ints(modes),
                            k=k, r=r, c=c, entries=entries, N=N))


def print_object(kind: str, **p) -> str:
    if kind == "gamma":
        return gamma_fn(p.get("index", 0), U).to_text()
    if kind == "fock-row":
        lam = tuple(p.get("shape", ()))
        lo, hi = p.get("modes", (-1, 1))
        F = FockModule()
        lines = []
        for m in range(lo, hi + 1):
            g = GeneratorMode(p.get("generator", "e"), m)
            vec = F.apply(g, lam)
            body = "; ".join(f"{list(t)}: {vec.terms[t].to_text()}" for t in sorted(vec.terms))
            lines.append(f"{g} {list(lam)} -> {body or '0'}")
        return "\n".join(lines)
    if kind == "tail":
        spec = _tail_spec(p.get("k", 1), p.get("r", 2), p.get("c"))
        return json.dumps(list(spec.head(p.get("entries", 6))), separators=(",", ":"))
    if kind == "macdonald":
        N = p.get("N", 2)
        lam = tuple(p.get("shape", ()))
        return macdonald_P_laurent(lam + (0,) * (N - len(lam)), N).to_text()
    raise ValueError(f"unknown object kind {kind!r}")


if __name__ == "__main__":
    main()
