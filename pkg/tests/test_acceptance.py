"""Acceptance suite: one test per criterion, each printing a pass/fail line.

All randomized loops are seeded and all tolerances are pinned here; runtime
budgets are asserted, not aspirational.
"""

import json
import math
import random
import time
from pathlib import Path

import pytest

from setfix import (
    AlphaBetaFunctional,
    CompactSet,
    ConstantGeneralized,
    EuclideanSpace,
    HardyRogers,
    Generalized,
    Nadler,
    PiecewiseAffineFn,
    Reich,
    ReichFunctional,
    as_generalized,
    brute_force_fixed_points,
    check_condition,
    contraction_ratio,
    alpha_prime,
    hausdorff_distance,
    iterate,
    naive_hausdorff,
    verify_cauchy_bound,
)
from setfix.coeffs import CoefficientTriple
from setfix.oracle import (
    random_admissible_constants,
    random_contractive_map,
    random_map,
    random_metric,
    random_subset,
)
from setfix.solver import CONVERGED, extract_rate_witness

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def report(name, ok, detail):
    print(f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def random_axiom_space(rng):
    """Matrix space (exact closure) or integer-grid line space: in both, the
    stored distances satisfy the triangle inequality exactly in floats, so
    the Hausdorff axioms must hold bit-exactly."""
    if rng.random() < 0.5:
        n = rng.randint(2, 12)
        sp = random_metric(rng, n)
        pick = lambda: random_subset(rng, n)
        return sp, pick
    sp = EuclideanSpace(1)
    coords = rng.sample(range(-40, 41), rng.randint(2, 12))

    def pick():
        size = rng.randint(1, len(coords))
        return CompactSet.from_points((float(c),) for c in rng.sample(coords, size))

    return sp, pick


def test_criterion_1_hausdorff_metric_axioms():
    rng = random.Random(101)
    t0 = time.perf_counter()
    n_instances = 10_000
    for _ in range(n_instances):
        sp, pick = random_axiom_space(rng)
        A, B, C = pick(), pick(), pick()
        hab = hausdorff_distance(sp, A, B)
        assert hab >= 0.0
        assert (hab == 0.0) == (A == B)
        assert hab == hausdorff_distance(sp, B, A)
        assert hausdorff_distance(sp, A, C) <= hab + hausdorff_distance(sp, B, C)
    elapsed = time.perf_counter() - t0
    report("1 hausdorff-axioms", elapsed < 10.0, f"{n_instances} instances in {elapsed:.2f}s")


def test_criterion_2_coefficient_identities():
    rng = random.Random(202)
    n_cases = 10_000
    for _ in range(n_cases):
        a, b, g = random_admissible_constants(rng)
        c = CoefficientTriple.constants(a, b, g)
        t = rng.uniform(0.0, 50.0)
        ap = alpha_prime(c, t)
        assert c.alpha.evaluate(t) < ap
        assert contraction_ratio(c, t, use_prime=True) < 1.0
    report("2 coefficient-identities", True, f"{n_cases} triples, zero failures")


def _certified_instances(rng, count, max_n=10):
    got = 0
    while got < count:
        sp = random_metric(rng, rng.randint(2, max_n))
        m = random_contractive_map(rng, sp)
        kind = ConstantGeneralized(*random_admissible_constants(rng))
        check = check_condition(m, kind)
        if check.certified:
            got += 1
            yield sp, m, kind, check


def test_criterion_3_and_4_falsification_and_trace_audit():
    rng = random.Random(303)
    t0 = time.perf_counter()
    n_instances = 5_000
    audited = 0
    for sp, m, kind, check in _certified_instances(rng, n_instances):
        oracle = brute_force_fixed_points(m)
        assert oracle.fixed_points, "certified instance with no fixed point: falsified"
        triple = as_generalized(kind)
        trace = iterate(m, triple, rng.randrange(sp.n), tol=1e-12, max_iter=10_000)
        assert trace.terminal == CONVERGED
        assert trace.x_star in oracle.fixed_points
        assert trace.residual == 0.0
        # Criterion 4: per-step audit of the same certified traces.
        for g0, g1 in zip(trace.gaps, trace.gaps[1:]):
            assert g1 <= g0, "gaps not non-increasing on a certified solve"
        for i in range(len(trace.gaps) - 1):
            assert trace.gaps[i + 1] <= trace.step_bounds[i] * trace.gaps[i]
        if trace.gaps:
            verify_cauchy_bound(trace, extract_rate_witness(trace, triple))
            audited += 1
    elapsed = time.perf_counter() - t0
    report(
        "3 falsification-harness",
        elapsed < 60.0,
        f"{n_instances} certified instances, all fixed points exact, {elapsed:.1f}s",
    )
    report("4 trace-audit", audited > 0, f"{audited} moving traces audited")


def _kind_samplers():
    rng_fn = lambda rng: PiecewiseAffineFn(
        (0.0, 1.0), ((rng.uniform(0.0, 0.05), rng.uniform(0.0, 0.35)),), rng.uniform(0.0, 0.4)
    )
    return {
        "Nadler": lambda rng: Nadler(rng.uniform(0.0, 0.999)),
        "Reich": lambda rng: Reich(rng.uniform(0.0, 0.499)),
        "HardyRogers": lambda rng: HardyRogers(*random_admissible_constants(rng)),
        "ReichFunctional": lambda rng: ReichFunctional(
            PiecewiseAffineFn((0.0, 1.0), ((rng.uniform(0.0, 0.05), rng.uniform(0.0, 0.3)),),
                              rng.uniform(0.0, 0.45))
        ),
        "AlphaBetaFunctional": lambda rng: AlphaBetaFunctional(
            rng_fn(rng),
            PiecewiseAffineFn.constant(rng.uniform(0.0, 0.2)),
        ),
    }


def test_criterion_5_hierarchy_embedding():
    rng = random.Random(505)
    needed = 1_000
    for name, sampler in _kind_samplers().items():
        certified = 0
        while certified < needed:
            sp = random_metric(rng, rng.randint(2, 7))
            m = random_contractive_map(rng, sp) if rng.random() < 0.8 else random_map(rng, sp)
            kind = sampler(rng)
            direct = check_condition(m, kind)
            embedded = check_condition(m, Generalized(as_generalized(kind)))
            assert direct.verdict == embedded.verdict, (name, sp.dist, kind)
            if direct.verdict == "violated":
                assert (direct.witness.x, direct.witness.y) == (
                    embedded.witness.x,
                    embedded.witness.y,
                )
            else:
                certified += 1
        print(f"  hierarchy {name}: {needed} certified instances, identical verdicts")
    report("5 hierarchy-embedding", True, f"{needed} certified per kind, 5 kinds")


def test_criterion_6_deterministic_convergence():
    from setfix.cli import main
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["solve", "--scenario", str(SCENARIOS / "halving.json")])
    assert code == 0
    halving = json.loads(buf.getvalue())
    assert halving["terminal"] == "ReachedTolerance"
    assert 28 <= halving["iterations"] <= 32
    assert abs(halving["x_star"][0]) <= 2e-9

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["solve", "--scenario", str(SCENARIOS / "flip.json")])
    assert code == 0  # scenario expects the budget exit
    flip = json.loads(buf.getvalue())
    assert flip["terminal"] == "MaxIterations"
    assert set(flip["gaps"]) == {1.0}
    report(
        "6 deterministic-convergence",
        True,
        f"halving: {halving['iterations']} iters, x*={halving['x_star'][0]:.3e}; flip: budget exit",
    )


def test_criterion_7_cross_oracle_hausdorff():
    rng = random.Random(707)
    n_cases = 3_000
    for _ in range(n_cases):
        if rng.random() < 0.5:
            n = rng.randint(2, 10)
            sp = random_metric(rng, n)
            A, B = random_subset(rng, n), random_subset(rng, n)
        else:
            dim = rng.randint(1, 4)
            sp = EuclideanSpace(dim)
            mk = lambda: CompactSet.from_points(
                tuple(rng.uniform(-10, 10) for _ in range(dim))
                for _ in range(rng.randint(1, 8))
            )
            A, B = mk(), mk()
        assert naive_hausdorff(sp, A, B) == hausdorff_distance(sp, A, B)
    report("7 cross-oracle-hausdorff", True, f"{n_cases} instances, 100% bit-exact agreement")
