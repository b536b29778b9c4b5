"""Acceptance suite: each test prints one PASS/FAIL line and asserts it.

Trial counts and tolerances are the contract values; nothing here is scaled
down.  Set ACCEPTANCE_SEED to rerun with different draws.
"""
import math
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest
import sympy as sp

from cdops.instances import cdiam
from cdops.minkowski import MinkPoint
from cdops.oracle import oracle_min_separation
from cdops.ortho import perp_stability_harness, symmetry_harness
from cdops.shapes import Boundary, Kind, ball, contains, diamond_between
from cdops.verify import (
    ball_gap_margin,
    check_delta_shift,
    check_epsilon,
    check_epsilon_image_retraction,
    check_omega,
    check_operad_laws,
    check_orthogonality_axioms,
    check_predicates_vs_oracle,
    check_retraction,
    threshold_by_bisection,
)

SEED = int(os.environ.get("ACCEPTANCE_SEED", "20240601"))
TRIALS = 1000
GOLDEN = Path(__file__).parent / "golden"


def verdict(report, number, title, ok, detail):
    report(f"{'PASS' if ok else 'FAIL'} criterion {number:2d} ({title}): {detail}")
    assert ok, detail


def describe(*reports):
    trials = sum(r.trials for r in reports)
    failures = [f for r in reports for f in r.failures]
    wall = sum(r.wall_time for r in reports)
    return failures, f"{trials} trials, {len(failures)} failures, {wall:.1f}s" + (
        f"; first: {failures[0]}" if failures else "")


def test_01_threshold_anchor(report):
    start = time.perf_counter()
    closed = threshold_by_bisection(lambda x: ball_gap_margin(x) > 0, 2.0, 4.0, 1e-12)

    def oracle_disjoint(x):
        rep = oracle_min_separation(ball((0.0, 0.0), 1.0), ball((0.0, x), 1.0), budget=100_000, seed=SEED)
        return rep.min_value > 0

    lo, hi = 2.7, 3.0
    assert not oracle_disjoint(lo) and oracle_disjoint(hi)
    while hi - lo > 1e-4:
        mid = 0.5 * (lo + hi)
        lo, hi = (lo, mid) if oracle_disjoint(mid) else (mid, hi)
    elapsed = time.perf_counter() - start
    target = 2 * math.sqrt(2)
    ok = abs(closed - target) <= 1e-9 and lo - 1e-3 <= target <= hi + 1e-3 and elapsed < 10
    verdict(report, 1, "threshold anchor", ok,
            f"closed form {closed!r} (err {abs(closed - target):.1e}), oracle bracket [{lo:.6f}, {hi:.6f}], "
            f"{elapsed:.1f}s")


def test_02_predicates_vs_oracle(report):
    r = check_predicates_vs_oracle(TRIALS, SEED, kinds=(Kind.BALL, Kind.DIAMOND), band=1e-6)
    failures, detail = describe(r)
    verdict(report, 2, "predicate-oracle differential", not failures and r.wall_time < 120, detail)


def test_03_orthogonality_axioms(report):
    r = check_orthogonality_axioms(TRIALS, SEED)
    failures, detail = describe(r)
    verdict(report, 3, "orthogonality axioms on cd/disc/cdiam, n=2..4", not failures, detail)


def test_04_operad_laws(report):
    exact = check_operad_laws(TRIALS, SEED, exact=True)
    flt = check_operad_laws(TRIALS, SEED, exact=False, tol=1e-12)
    failures, detail = describe(exact, flt)
    verdict(report, 4, "operad laws exact and float", not failures, detail)


def test_05_epsilon(report):
    r = check_epsilon(TRIALS, SEED)
    failures, detail = describe(r)
    verdict(report, 5, "epsilon well-defined, tangent case marginal", not failures, detail)


def test_06_retraction(report):
    paths = check_retraction(TRIALS, SEED, samples=100)
    image = check_epsilon_image_retraction(TRIALS, SEED, samples=100)
    failures, detail = describe(paths, image)
    verdict(report, 6, "retraction certification", not failures, detail)


def test_07_delta_shift(report):
    r = check_delta_shift(TRIALS, SEED, shifts=10)
    failures, detail = describe(r)
    verdict(report, 7, "delta-shift", not failures, detail)


def test_08_omega(report):
    r = check_omega(TRIALS, SEED)
    failures, detail = describe(r)
    verdict(report, 8, "omega soundness", not failures, detail)


def test_09_order_invariant(report):
    r = check_retraction(TRIALS, SEED, dims=(2,), samples=100)
    failures, detail = describe(r)
    order_failures = [f for f in failures if "order" in f.get("problems", [])]
    verdict(report, 9, "n=2 spatial order constant along paths", not failures,
            f"{detail}; order changes in {len(order_failures)} paths")


def test_10_causal_convexity(report):
    h = sp.sqrt(2) / 2
    p, q = (-h, h), (h, h)
    center_t, center_x, rad = (p[0] + q[0]) / 2, (p[1] + q[1]) / 2, (q[0] - p[0]) / 2
    pt_t, pt_x = sp.Integer(0), sp.sqrt(2) - sp.Rational(1, 10**6)
    gauge = sp.Abs(pt_t - center_t) + sp.Abs(pt_x - center_x)
    inside = bool(sp.simplify(rad - gauge) > 0)
    outside_unit = bool(sp.simplify(pt_t**2 + pt_x**2 - 1) > 0)
    # the float implementation agrees
    d = diamond_between((-math.sqrt(2) / 2, math.sqrt(2) / 2), (math.sqrt(2) / 2, math.sqrt(2) / 2))
    pt = MinkPoint.of(0.0, math.sqrt(2) - 1e-6)
    floats = contains(d, pt) and d.boundary is Boundary.OPEN and pt.norm() > 1
    verdict(report, 10, "causal convexity anchor", inside and outside_unit and floats,
            f"exact margin {sp.nsimplify(rad - gauge)} > 0, |p|^2 - 1 = {sp.N(pt_t**2 + pt_x**2 - 1, 8)} > 0")


def test_11_diamond_suite(report):
    preds = check_predicates_vs_oracle(TRIALS, SEED, kinds=(Kind.DIAMOND,), band=1e-6)
    harness_failures, harness_trials = [], 0
    for n in (2, 3, 4):
        for h in (symmetry_harness(cdiam(n), TRIALS, SEED), perp_stability_harness(cdiam(n), TRIALS, SEED)):
            harness_trials += h.trials
            harness_failures += h.violations
    paths = check_retraction(TRIALS, SEED, make=cdiam, samples=100)
    image = check_epsilon_image_retraction(TRIALS, SEED, samples=100, kind=Kind.DIAMOND)
    failures, detail = describe(preds, paths, image)
    failures += harness_failures
    verdict(report, 11, "diamond reruns of 2, 3, 6", not failures,
            f"{detail}; harnesses {harness_trials} trials, {len(harness_failures)} failures")


@pytest.mark.parametrize("kind", ["ball", "diamond"])
def test_12_cli_determinism(report, tmp_path, kind):
    tag = "cd" if kind == "ball" else "cdiam"
    outs = []
    for run in ("a", "b"):
        cfg, svg = tmp_path / f"{run}.json", tmp_path / f"{run}.svg"
        cli = [sys.executable, "-m", "cdops.cli"]
        subprocess.run(cli + ["gen", "--n", "2", "--k", "3", "--kind", kind, "--seed", "42",
                              "--min-margin", "0.01", "--out", str(cfg)], check=True)
        subprocess.run(cli + ["render", str(cfg), "--cones", "--out", str(svg)], check=True)
        outs.append((cfg.read_bytes(), svg.read_bytes()))
    golden = ((GOLDEN / f"gen_{tag}_k3_s42.json").read_bytes(), (GOLDEN / f"render_{tag}_k3_s42.svg").read_bytes())
    ok = outs[0] == outs[1] == golden
    verdict(report, 12, f"CLI determinism ({kind})", ok,
            "gen and render byte-identical across runs and to golden files" if ok else "outputs differ")
