"""Randomized property suites behind ``cdops verify`` and the acceptance tests.

Every check takes a trial count and a base seed; trial ``i`` draws from
``random.Random(seed + i)`` (or a numpy generator seeded the same way), so
reports are reproducible and independent of execution order.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import homotopy
from .instances import cd, cdiam, disc, epsilon_embed, forget_omega, in_epsilon_image
from .minkowski import MinkPoint
from .oracle import oracle_min_separation
from .ortho import (
    block_permutation,
    identity_operation,
    multi_compose,
    multi_permute,
    multi_validate,
    perp_stability_harness,
    symmetry_harness,
)
from .rect import RectMap
from .sampling import random_multimorphism
from .shapes import Kind, Shape, Ternary, causal_margin, causally_disjoint, delta_shift

BAND = 1e-6
ORACLE_BUDGET = 4000
#: Relative rounding allowed when checking that oracle witnesses lie in their shapes.
WITNESS_SLACK = 1e-12
DIMS = (2, 3, 4)


@dataclass
class VerifyReport:
    suite: str
    trials: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def extend(self, other: "VerifyReport") -> "VerifyReport":
        self.trials += other.trials
        self.failures.extend(other.failures)
        self.wall_time += other.wall_time
        return self

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.suite}: {self.trials} trials, {len(self.failures)} failures, {self.wall_time:.2f}s"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "failures": self.failures,
            "wall_time": round(self.wall_time, 3),
        }


def _timed(name):
    def wrap(fn):
        def run(*args, **kwargs):
            report = VerifyReport(name)
            start = time.perf_counter()
            fn(report, *args, **kwargs)
            report.wall_time = time.perf_counter() - start
            return report

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


def random_shape(kind: Kind, n: int, rng: random.Random) -> Shape:
    return Shape(kind, MinkPoint(tuple(rng.uniform(-2, 2) for _ in range(n))), rng.uniform(0.05, 1.0))


def _oracle_status(value: float, band: float) -> str:
    return Ternary.classify(value, band).status.value


# -- predicates -----------------------------------------------------------


@_timed("predicates-vs-oracle")
def check_predicates_vs_oracle(report, trials, seed, dims=DIMS, kinds=(Kind.BALL, Kind.DIAMOND),
                               budget=ORACLE_BUDGET, band=BAND):
    """Closed-form causal margins against the brute-force oracle, per ``(n, kind)``."""
    for kind in kinds:
        for n in dims:
            for i in range(trials):
                s = seed + i
                rng = random.Random(s)
                S, T = random_shape(kind, n, rng), random_shape(kind, n, rng)
                closed = causally_disjoint(S, T, band)
                rep = oracle_min_separation(S, T, budget, s)
                report.trials += 1
                p, q = rep.witness_pair
                sound = S.gauge(p) <= 1 + WITNESS_SLACK and T.gauge(q) <= 1 + WITNESS_SLACK
                oracle = _oracle_status(rep.min_value, band)
                if not sound or {closed.status.value, oracle} == {"disjoint", "not_disjoint"}:
                    report.failures.append({
                        "check": f"{kind.value}/n={n}", "seed": s, "closed_margin": closed.margin,
                        "oracle_min": rep.min_value, "witness_inside": sound,
                    })


@_timed("delta-shift")
def check_delta_shift(report, trials, seed, dims=DIMS, shifts=10, tau=1e-9):
    """Shifting a ball toward ``t = 0`` keeps it causally disjoint from a ball centered at ``t = 0``."""
    for i in range(trials):
        s = seed + i
        rng = random.Random(s)
        n = dims[i % len(dims)]
        while True:
            b0 = Shape(Kind.BALL, MinkPoint((0.0, *(rng.uniform(-2, 2) for _ in range(n - 1)))), rng.uniform(0.05, 1))
            b1 = Shape(Kind.BALL, MinkPoint(tuple(rng.uniform(-3, 3) for _ in range(n))), rng.uniform(0.05, 1))
            base = causally_disjoint(b0, b1, tau)
            if base.disjoint and b1.center.t != 0:
                break
        report.trials += 1
        prev = base.margin
        for delta in sorted(rng.uniform(0, abs(b1.center.t)) for _ in range(shifts)):
            res = causally_disjoint(b0, delta_shift(b1, delta), tau)
            if not res.disjoint or res.margin < prev - 1e-12:
                report.failures.append({"seed": s, "delta": delta, "margin": res.margin, "previous": prev})
                break
            prev = res.margin


# -- operad axioms --------------------------------------------------------


def _instances(dims=DIMS):
    return [make(n) for make in (cd, disc, cdiam) for n in dims]


@_timed("perp-axioms")
def check_orthogonality_axioms(report, trials, seed, dims=DIMS):
    """Symmetry and composition stability of every instance's relation."""
    for inst in _instances(dims):
        for harness in (symmetry_harness, perp_stability_harness):
            h = harness(inst, trials, seed)
            report.trials += h.trials
            report.failures.extend({"check": h.name, **v} for v in h.violations)


def _random_operation(inst, rng, kmax, exact):
    k = rng.randint(1, kmax)
    mm = random_multimorphism(inst, k, rng, min_margin=10 * inst.tolerance)
    if exact:
        mm = multi_validate(inst, [f.to_rational() for f in mm.maps])
    return mm


def _same(ms1, ms2, exact, tol):
    if len(ms1) != len(ms2):
        return False
    if exact:
        return all(a == b for a, b in zip(ms1, ms2))
    return all(a.is_close(b, tol) for a, b in zip(ms1, ms2))


@_timed("operad-laws")
def check_operad_laws(report, trials, seed, dims=DIMS, kmax=4, exact=True, tol=1e-12, relations=(cd, disc, cdiam)):
    """Unit, associativity (depth 2) and equivariance of composition."""
    for i in range(trials):
        s = seed + i
        rng = random.Random(s)
        inst = relations[i % len(relations)](dims[(i // len(relations)) % len(dims)])
        f = _random_operation(inst, rng, kmax, exact)
        gs = [_random_operation(inst, rng, 3, exact) for _ in range(f.arity)]
        fg = multi_compose(f, gs)
        hs = [_random_operation(inst, rng, 2, exact) for _ in range(fg.arity)]
        ident = identity_operation(inst, exact)
        report.trials += 1
        failed = []

        if not _same(multi_compose(f, [ident] * f.arity).maps, f.maps, exact, tol):
            failed.append("right unit")
        if not _same(multi_compose(ident, [f]).maps, f.maps, exact, tol):
            failed.append("left unit")

        left = multi_compose(fg, hs)
        blocks, pos = [], 0
        for g in gs:
            blocks.append(multi_compose(g, hs[pos:pos + g.arity]))
            pos += g.arity
        right = multi_compose(f, blocks)
        if not _same(left.maps, right.maps, exact, tol):
            failed.append("associativity")

        sigma = list(range(f.arity))
        rng.shuffle(sigma)
        lhs = multi_compose(multi_permute(f, sigma), [gs[j] for j in sigma])
        rhs = multi_permute(fg, block_permutation(sigma, [g.arity for g in gs]))
        if not _same(lhs.maps, rhs.maps, exact, tol):
            failed.append("block equivariance")

        taus = []
        for g in gs:
            t = list(range(g.arity))
            rng.shuffle(t)
            taus.append(t)
        lhs = multi_compose(f, [multi_permute(g, t) for g, t in zip(gs, taus)])
        offsets = [0]
        for g in gs:
            offsets.append(offsets[-1] + g.arity)
        induced = [offsets[b] + t[j] for b, t in enumerate(taus) for j in range(len(t))]
        rhs = multi_permute(fg, induced)
        if not _same(lhs.maps, rhs.maps, exact, tol):
            failed.append("input equivariance")

        if fg.validity.violated or left.validity.violated:
            failed.append("closure")
        if failed:
            report.failures.append({"seed": s, "instance": inst.name, "laws": failed})


# -- embedding and forgetful map ------------------------------------------


@_timed("epsilon")
def check_epsilon(report, trials, seed, dims=DIMS, kmax=5, kind=Kind.BALL):
    """Strictly disjoint Disc_{n-1} operations embed as valid causal operations."""
    for i in range(trials):
        s = seed + i
        rng = random.Random(s)
        n = dims[i % len(dims)]
        k = 1 + (i // len(dims)) % kmax
        src = disc(n - 1)
        phi = random_multimorphism(src, k, rng, min_margin=10 * src.tolerance)
        report.trials += 1
        try:
            psi = epsilon_embed(phi, kind)
        except Exception as exc:  # noqa: BLE001 - any failure is a reportable defect
            report.failures.append({"seed": s, "error": repr(exc)})
            continue
        pair_ok = all(m > 0 for m in psi.pair_margins.values())
        if psi.validity.violated or not pair_ok or any(f.translate.t != 0 for f in psi.maps):
            report.failures.append({"seed": s, "margin": psi.margin})
    tangent = multi_validate(disc(1), [RectMap(0.5, (-0.5,)), RectMap(0.5, (0.5,))])
    out = epsilon_embed(tangent, kind)
    report.trials += 1
    if out.validity.status.value != "marginal":
        report.failures.append({"check": "tangent intervals", "status": out.validity.status.value})


@_timed("omega")
def check_omega(report, trials, seed, dims=DIMS, kmax=5, make=cd):
    """Causally disjoint operations stay valid when only interiors are required disjoint."""
    for i in range(trials):
        s = seed + i
        rng = random.Random(s)
        inst = make(dims[i % len(dims)])
        psi = random_multimorphism(inst, 1 + (i // len(dims)) % kmax, rng, min_margin=0.0)
        report.trials += 1
        try:
            omega = forget_omega(psi)
        except Exception as exc:  # noqa: BLE001
            report.failures.append({"seed": s, "error": repr(exc)})
            continue
        if any(omega.pair_margins[ij] < m for ij, m in psi.pair_margins.items()):
            report.failures.append({"seed": s, "check": "interior margin below causal margin"})


# -- retraction -----------------------------------------------------------


def _monotone_stage1(path, slack=1e-12):
    seen = {}
    for u, mm in path.samples:
        if u > homotopy.STAGE1_END:
            break
        for ij, m in mm.pair_margins.items():
            if ij in seen and m < seen[ij] - slack:
                return False
            seen[ij] = m
    return True


@_timed("retraction")
def check_retraction(report, trials, seed, dims=DIMS, kmax=5, samples=100, make=cd, tol=1e-9):
    """Certified retraction paths: validity, endpoint, stage-1 monotonicity, n = 2 order."""
    for i in range(trials):
        s = seed + i
        rng = random.Random(s)
        n = dims[i % len(dims)]
        k = 1 + (i // len(dims)) % kmax
        inst = make(n)
        psi = random_multimorphism(inst, k, rng, min_margin=10 * inst.tolerance)
        report.trials += 1
        try:
            path = homotopy.retract_full(psi, samples)
        except Exception as exc:  # noqa: BLE001
            report.failures.append({"seed": s, "error": repr(exc)})
            continue
        problems = []
        if path.samples[0][1].maps != psi.maps:
            problems.append("start")
        if not in_epsilon_image(path.endpoint, tol):
            problems.append("endpoint")
        if not _monotone_stage1(path):
            problems.append("stage-1 monotonicity")
        if n == 2:
            orders = {homotopy.spatial_order(mm) for _, mm in path.samples}
            if len(orders) != 1:
                problems.append("order")
        if problems:
            report.failures.append({"seed": s, "instance": inst.name, "problems": problems})


@_timed("epsilon-image-retraction")
def check_epsilon_image_retraction(report, trials, seed, dims=DIMS, kmax=5, samples=100, kind=Kind.BALL):
    """Embedded configurations have a constant first stage and end in the image again."""
    for i in range(trials):
        s = seed + i
        rng = random.Random(s)
        n = dims[i % len(dims)]
        src = disc(n - 1)
        phi = random_multimorphism(src, 1 + (i // len(dims)) % kmax, rng, min_margin=10 * src.tolerance)
        psi = epsilon_embed(phi, kind)
        report.trials += 1
        try:
            path = homotopy.retract_full(psi, samples)
        except Exception as exc:  # noqa: BLE001
            report.failures.append({"seed": s, "error": repr(exc)})
            continue
        const = all(mm.maps == psi.maps for u, mm in path.samples if u <= homotopy.STAGE1_END)
        if not (path.stage1_constant and const and in_epsilon_image(path.endpoint)):
            report.failures.append({"seed": s})


# -- suites ---------------------------------------------------------------


def _merge(name, reports):
    out = VerifyReport(name)
    for r in reports:
        out.extend(r)
    return out


def suite_axioms(trials, seed):
    return _merge("axioms", [
        check_operad_laws(trials, seed, exact=True),
        check_operad_laws(trials, seed, exact=False),
        check_orthogonality_axioms(trials, seed),
    ])


def suite_predicates(trials, seed):
    return _merge("predicates", [
        check_predicates_vs_oracle(trials, seed, kinds=(Kind.BALL,)),
        check_delta_shift(trials, seed),
    ])


def suite_epsilon(trials, seed):
    return _merge("epsilon", [check_epsilon(trials, seed)])


def suite_retraction(trials, seed):
    return _merge("retraction", [
        check_retraction(trials, seed),
        check_epsilon_image_retraction(trials, seed),
    ])


def suite_omega(trials, seed):
    return _merge("omega", [check_omega(trials, seed)])


def suite_diamonds(trials, seed):
    return _merge("diamonds", [
        check_predicates_vs_oracle(trials, seed, kinds=(Kind.DIAMOND,)),
        check_operad_laws(trials, seed, relations=(cdiam,)),
        check_orthogonality_axioms(trials, seed),
        check_epsilon(trials, seed, kind=Kind.DIAMOND),
        check_retraction(trials, seed, make=cdiam),
        check_epsilon_image_retraction(trials, seed, kind=Kind.DIAMOND),
        check_omega(trials, seed, make=cdiam),
    ])


SUITES = {
    "axioms": suite_axioms,
    "predicates": suite_predicates,
    "epsilon": suite_epsilon,
    "retraction": suite_retraction,
    "omega": suite_omega,
    "diamonds": suite_diamonds,
}


def run_suite(name: str, trials: int, seed: int) -> VerifyReport:
    if trials < 1:
        raise ValueError("trials must be positive")
    if name == "all":
        return _merge("all", [fn(trials, seed) for fn in SUITES.values()])
    return SUITES[name](trials, seed)


def threshold_by_bisection(predicate, lo: float, hi: float, tol: float) -> float:
    """Bisect a monotone boolean predicate that is False at ``lo`` and True at ``hi``."""
    if predicate(lo) or not predicate(hi):
        raise ValueError("predicate must be False at lo and True at hi")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if predicate(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def ball_gap_margin(x: float) -> float:
    """Closed-form causal margin of unit balls centered ``(0, 0)`` and ``(0, x)`` in two dimensions."""
    return causal_margin(Shape(Kind.BALL, MinkPoint((0.0, 0.0)), 1.0), Shape(Kind.BALL, MinkPoint((0.0, x)), 1.0))

