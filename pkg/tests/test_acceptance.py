"""Acceptance criteria, one test per criterion; each prints a PASS/FAIL line."""
import os
import subprocess
import sys
import time
from math import comb, factorial
from pathlib import Path

import pytest

from polarinv import harness
from polarinv.fields import GF, QQ
from polarinv.invariants import Strategy, beta_exact, hilbert_ideal_generators
from polarinv.permaction import alternating_group, symmetric_group

pytestmark = pytest.mark.acceptance

ROOT = Path(__file__).resolve().parent.parent
BOUND_CASES = [("S2", 2), ("S2", 3), ("S3", 2), ("A3", 2), ("C3", 2)]


@pytest.fixture(scope="module")
def bound_reports():
    t = time.perf_counter()
    reports = {case: harness.cmd_bound_check(*case) for case in BOUND_CASES}
    return reports, time.perf_counter() - t


def test_1_symmetric_lead_ideal(record_acceptance):
    t = time.perf_counter()
    bad = []
    for n in range(2, 6):
        rep = harness.cmd_snlead(n)
        want = ["x1"] + [f"x{i}^{i}" for i in range(2, n + 1)]
        if rep.lead_ideal != want or rep.top_degree != comb(n, 2) \
                or rep.details["standard_monomials"] != factorial(n):
            bad.append(n)
    elapsed = time.perf_counter() - t
    ok = not bad and elapsed < 120
    record_acceptance("1 S_n lead ideal (n=2..5)", ok, f"failures={bad} time={elapsed:.1f}s")
    assert ok


def _sweeps(fld):
    reps = []
    for n in range(1, 4):
        for m in range(1, 4):
            reps.append(harness.cmd_lemma_sweep(n, m, 5, fld))
    return reps


def test_2_oracle_equivalence(record_acceptance):
    t = time.perf_counter()
    reps = _sweeps(QQ)
    elapsed = time.perf_counter() - t
    mismatches = sum(r.details["mismatches"] for r in reps)
    checks = sum(r.details["lead_checks"] for r in reps)
    ok = mismatches == 0 and elapsed < 300
    record_acceptance("2 fast lead vs expansion", ok,
                      f"checks={checks} mismatches={mismatches} time={elapsed:.1f}s")
    assert ok


def test_3_monotonicity(record_acceptance):
    t = time.perf_counter()
    reps = _sweeps(QQ) + _sweeps(GF(5))
    elapsed = time.perf_counter() - t
    violations = sum(r.details["violations"] for r in reps)
    mismatches = sum(r.details["mismatches"] for r in reps)
    pairs = sum(r.details["pairs_checked"] for r in reps)
    ok = violations == 0 and mismatches == 0 and elapsed < 600
    record_acceptance("3 strict monotonicity (QQ and F_5)", ok,
                      f"pairs={pairs} violations={violations} time={elapsed:.1f}s")
    assert ok


def test_4_containment(bound_reports, record_acceptance):
    reports, _ = bound_reports
    failures = {}
    for case, rep in reports.items():
        f = rep.details["membership_failures"] + rep.details["lead_failures"]
        if f:
            failures[case] = f
    checked = sum(r.details["polarizations_checked"] for r in reports.values())
    ok = not failures
    record_acceptance("4 polarization containment", ok,
                      f"polarizations={checked} failures={failures}")
    assert ok


def test_5_bounds(bound_reports, record_acceptance):
    reports, elapsed = bound_reports
    t = time.perf_counter()
    claims = ("top_degree_le_C(n,2)", "generation_degree_le_C(n,2)+1", "beta_le_C(n,2)+1",
              "theorem_family_in_lead_ideal")
    bad = [(case, c) for case, rep in reports.items() for c in claims if not rep.passed[c]]
    b_s2 = beta_exact(symmetric_group(2), 2, 2).beta
    b_a3 = beta_exact(alternating_group(3), 3, 1).beta
    elapsed += time.perf_counter() - t
    ok = not bad and b_s2 == 2 and b_a3 == 3 and elapsed < 1800
    summary = " ".join(f"{g}/m{m}:top={r.top_degree},beta={r.beta}"
                       for (g, m), r in reports.items())
    record_acceptance("5 degree bounds", ok,
                      f"{summary} beta(S2,V^2)={b_s2} beta(A3,V)={b_a3} time={elapsed:.1f}s")
    assert ok


def test_6_generator_strategies(record_acceptance):
    failures = {}
    for G, m in [(symmetric_group(2), 1), (symmetric_group(2), 2), (symmetric_group(3), 1)]:
        a = hilbert_ideal_generators(G, m, Strategy.GOEBEL_POLARIZED)
        b = hilbert_ideal_generators(G, m, Strategy.NOETHER_REYNOLDS)
        res = harness.compare_generating_sets(a.gens, b.gens)
        if res["failures"]:
            failures[(G.name, m)] = res["failures"]
    ok = not failures
    record_acceptance("6 polarized vs averaged generators", ok, f"failures={failures}")
    assert ok


PROPERTY_FILES = sorted((ROOT / "tests" / "properties").glob("test_*.py"))


@pytest.mark.parametrize("path", PROPERTY_FILES, ids=lambda p: p.stem)
def test_7_property_suite_standalone(path, record_acceptance):
    env = dict(os.environ)
    res = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
                          str(path)], cwd=ROOT, env=env, capture_output=True, text=True)
    last = res.stdout.strip().splitlines()[-1] if res.stdout.strip() else res.stderr[-200:]
    ok = res.returncode == 0
    record_acceptance(f"7 property suite {path.stem}", ok, last)
    assert ok, res.stdout[-2000:]
