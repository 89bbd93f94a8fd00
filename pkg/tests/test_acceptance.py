"""Acceptance criteria 1-10, one test each.

Run directly (``python3 tests/test_acceptance.py``) for the ten summary lines
alone; under pytest they are repeated in the terminal summary.
"""
import sys
import time

import pytest

from qcgl.suites import ACCEPTANCE, TITLES

RESULTS = {}


def line(n, rep, seconds):
    s = rep.summary
    verdict = "PASS" if rep.passed else "FAIL"
    return (f"criterion {n}: {verdict}  {TITLES[n]}  "
            f"({s['pass']} pass, {s['fail']} fail, {s['error']} error, {seconds:.0f}s)")


def run_criterion(n):
    t0 = time.perf_counter()
    rep = ACCEPTANCE[n]()
    text = line(n, rep, time.perf_counter() - t0)
    RESULTS[n] = text
    print(text)
    return rep


@pytest.mark.parametrize("n", sorted(ACCEPTANCE))
def test_criterion(n):
    rep = run_criterion(n)
    assert rep.passed, rep.failures()[:5]


if __name__ == "__main__":
    ok = all(run_criterion(n).passed for n in sorted(ACCEPTANCE))
    sys.exit(0 if ok else 1)
