"""The ten acceptance criteria, each run at its stated grid and time bound.

Every test prints a single ``PASS``/``FAIL`` line; the lines are repeated in
the terminal summary under "acceptance criteria".
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from multiseg.order import DEFAULT_BUDGET
from multiseg.verify import Config, run_suite

GRID = Config(max_end=7, max_segments=5, budget=DEFAULT_BUDGET, seed=0, random_cases=10_000)
# involution population: exhaustive over [0,5] with at most 4 segments, plus seeded random cases
INVOLUTION = Config(max_end=5, max_segments=4, budget=DEFAULT_BUDGET, seed=0, random_cases=10_000)


def _record(capsys, number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2} {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    with capsys.disabled():
        print(f"\n{line}")


def _check(capsys, number, title, suites, cfg, seconds=None):
    start = time.perf_counter()
    reports = [run_suite(s, cfg) for s in suites]
    elapsed = time.perf_counter() - start
    cases = sum(r.cases_run for r in reports)
    failures = [f for r in reports for f in r.failures]
    in_time = seconds is None or elapsed < seconds
    ok = not failures and in_time and cases > 0
    bound = f" (limit {seconds}s)" if seconds is not None else ""
    detail = f"{cases} cases, {len(failures)} failures, {elapsed:.2f}s{bound}"
    if failures:
        kinds = sorted({f["check"] for f in failures})
        detail += f"; failing checks: {', '.join(kinds)}; first: {failures[0]['inputs']}"
    _record(capsys, number, title, ok, detail)
    return ok, failures, elapsed


def test_c01_involution(capsys):
    ok, failures, elapsed = _check(capsys, 1, "involution", ["involution"], INVOLUTION, seconds=120)
    assert not failures and elapsed < 120


def test_c02_rectangle(capsys):
    ok, failures, elapsed = _check(capsys, 2, "rectangle duality n,d<=8", ["rectangle"], GRID, seconds=1)
    assert not failures and elapsed < 1


def test_c03_length_bounds(capsys):
    ok, failures, _ = _check(capsys, 3, "length bounds", ["length-bounds"], INVOLUTION)
    assert not failures


def test_c04_speh_cross_validation(capsys):
    """Both quadruple criteria agree everywhere, and the two general
    certificates must decide every pair in agreement with them.

    Known to fail: the downset scan stays undecided on linked-but-not-crossed
    pairs, e.g. (0,1,0,1) with (1,1,2,2), where c = [0,1]+[1,2] lies below
    a+b and c^t = c lies below (a+b)^t.  The check is left in force.
    """
    ok, failures, elapsed = _check(capsys, 4, "speh cross-validation", ["speh-cross-validation"], GRID,
                                   seconds=600)
    criteria_mismatch = [f for f in failures if f["check"] == "thm72-equals-thm71"]
    wrong = [f for f in failures if f["check"] == "certificate-agrees"]
    assert not criteria_mismatch, "quadruple criteria disagree"
    assert not wrong, "a certificate contradicts the quadruple criterion"
    assert elapsed < 600
    assert not failures, f"{len(failures)} pairs left Unknown by RC + downset scan"


def test_c05_mw_equivalence(capsys):
    ok, failures, _ = _check(capsys, 5, "MW linking equivalence", ["mw-equivalence"], GRID)
    assert not failures


def test_c06_lnt_equivalence(capsys):
    ok, failures, _ = _check(capsys, 6, "interval-set equivalence", ["lnt-equivalence"], GRID)
    assert not failures


def test_c07_containment(capsys):
    ok, failures, _ = _check(capsys, 7, "support containment", ["containment"], GRID)
    assert not failures


def test_c08_contact(capsys):
    ok, failures, _ = _check(capsys, 8, "contact closed form", ["contact"], GRID)
    assert not failures


def test_c09_closure(capsys):
    ok, failures, _ = _check(capsys, 9, "shrink closure and k-fold additivity", ["closure"], GRID)
    assert not failures


def test_c10_blm(capsys):
    ok, failures, _ = _check(capsys, 10, "reducible implies crossed", ["blm"], GRID)
    assert not failures
