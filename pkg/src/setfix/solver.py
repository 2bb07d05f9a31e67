"""Constructive fixed-point iteration for set-valued contraction maps.

Successors are chosen by argmin of d(., x_n) over T x_n with canonical
tie-breaking, which realizes the existential selection of the convergence
argument deterministically.  The full run is recorded as an audit trace:
points, gaps, per-step ratio bounds, a geometric rate witness, and the
terminal residual.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .coeffs import CoefficientTriple, contraction_ratio
from .conditions import SetValuedMap
from .metric import CompactSet, Point, point_to_set_distance


class SolverError(RuntimeError):
    """Contract violation during iteration or trace verification."""


CONVERGED = "ConvergedFixedPoint"
TOLERANCE = "ReachedTolerance"
MAX_ITER = "MaxIterations"
STAGNATION = "StagnationWithoutFixedPoint"


@dataclass(frozen=True)
class RateWitness:
    """Geometric decay certificate for the tail of a gap sequence.

    Beyond threshold_index every gap lies in [tau_estimate, tau_estimate +
    epsilon] and each successive gap shrinks by at least the factor r < 1.
    """

    r: float
    epsilon: float
    threshold_index: int
    tau_estimate: float


@dataclass(frozen=True)
class IterationTrace:
    points: Tuple[Point, ...]
    gaps: Tuple[float, ...]
    step_bounds: Tuple[float, ...]
    rate: Optional[RateWitness]
    terminal: str
    x_star: Optional[Point]
    residual: float
    tol: float


def select_next(map_: SetValuedMap, x: Point, y: Point) -> Point:
    """Successor of y given y in T(x): the canonically-first argmin of d(., y) over T(y).

    The returned point attains D(y, Ty), so it satisfies the selection
    bound of the convergence argument whenever the hypotheses hold.
    """
    if y not in map_.image(x):
        raise SolverError(f"precondition failed: {y!r} not in the image of {x!r}")
    return _argmin_image(map_, y)


def _argmin_image(map_: SetValuedMap, y: Point) -> Point:
    space = map_.space
    candidates = map_.image(y).elements
    best = candidates[0]
    best_d = space.distance(best, y)
    for c in candidates[1:]:
        d = space.distance(c, y)
        if d < best_d:
            best, best_d = c, d
    return best


def iterate(
    map_: SetValuedMap,
    triple: CoefficientTriple,
    x0: Point,
    tol: float = 1e-9,
    max_iter: int = 10_000,
) -> IterationTrace:
    """Run the successor iteration from x0 and record the full trace.

    Termination: ConvergedFixedPoint when the successor equals the current
    point (an exact fixed point); ReachedTolerance when the gap drops below
    tol and the residual D(x, Tx) is within tol; StagnationWithoutFixedPoint
    when a sub-tolerance exact cycle is detected that is not a fixed point;
    MaxIterations otherwise.  The caller is responsible for having certified
    the coefficient hypotheses; the solver records ratio bounds but does not
    re-derive the certificate.
    """
    if not (tol > 0.0 and math.isfinite(tol)):
        raise SolverError(f"tol must be a positive finite real, got {tol!r}")
    if max_iter < 1:
        raise SolverError(f"max_iter must be >= 1, got {max_iter!r}")
    space = map_.space
    space.validate_point(x0)

    def residual_at(p: Point) -> float:
        return point_to_set_distance(space, p, map_.image(p))

    x1 = _argmin_image(map_, x0)
    if x1 == x0:
        return IterationTrace((x0,), (), (), None, CONVERGED, x0, 0.0, tol)

    points: List[Point] = [x0, x1]
    gaps: List[float] = [space.distance(x1, x0)]
    bounds: List[float] = [contraction_ratio(triple, gaps[0], use_prime=True)]
    seen_states = {(x0, x1): 0}

    terminal = MAX_ITER
    x_star: Optional[Point] = None
    residual = math.nan
    while len(gaps) < max_iter:
        cur = points[-1]
        x_next = _argmin_image(map_, cur)
        gap = space.distance(x_next, cur)
        points.append(x_next)
        gaps.append(gap)
        bounds.append(contraction_ratio(triple, gap, use_prime=True))
        if x_next == cur:
            terminal, x_star, residual = CONVERGED, cur, 0.0
            break
        if gap < tol:
            res = residual_at(x_next)
            if res <= tol:
                terminal, x_star, residual = TOLERANCE, x_next, res
                break
            # Sub-tolerance exact cycle that is not a fixed point: no further
            # progress is possible, stop instead of burning the budget.
            if (cur, x_next) in seen_states:
                terminal, residual = STAGNATION, res
                break
        seen_states[(cur, x_next)] = len(gaps)
    if terminal == MAX_ITER:
        residual = residual_at(points[-1])
    trace = IterationTrace(
        tuple(points), tuple(gaps), tuple(bounds), None, terminal, x_star, residual, tol
    )
    try:
        rate = extract_rate_witness(trace, triple)
    except SolverError:
        rate = None
    return IterationTrace(
        trace.points, trace.gaps, trace.step_bounds, rate, terminal, x_star, residual, tol
    )


def extract_rate_witness(trace: IterationTrace, triple: CoefficientTriple) -> RateWitness:
    """Find the minimal threshold index with a geometric tail certificate.

    For each candidate index nu, r is the largest contraction-ratio bound
    over the tail gaps; the witness requires r < 1 and that every recorded
    tail step actually satisfied gap(n+1) <= r * gap(n).  tau_estimate is
    the smallest recorded gap (never claimed to equal the true limit);
    epsilon covers the spread of the tail above it.
    """
    g = trace.gaps
    if len(g) == 0:
        r = contraction_ratio(triple, 0.0, use_prime=True)
        return RateWitness(r, sys.float_info.min, 0, 0.0)
    tau = min(g)
    ratios = [contraction_ratio(triple, t, use_prime=True) for t in g]
    suffix_r = list(ratios)
    suffix_gap = list(g)
    for n in range(len(g) - 2, -1, -1):
        suffix_r[n] = max(suffix_r[n], suffix_r[n + 1])
        suffix_gap[n] = max(suffix_gap[n], suffix_gap[n + 1])
    # The threshold must leave at least one recorded step to dominate, so a
    # non-shrinking tail cannot sneak through on a vacuous check.
    last_nu = len(g) - 1 if len(g) == 1 else len(g) - 2
    for nu in range(last_nu + 1):
        r = suffix_r[nu]
        if r >= 1.0:
            continue
        if all(g[n + 1] <= r * g[n] for n in range(nu, len(g) - 1)):
            eps = suffix_gap[nu] - tau
            if eps <= 0.0:
                eps = sys.float_info.min
            return RateWitness(r, eps, nu, tau)
    raise SolverError("no tail index admits a geometric rate witness (r < 1)")


def verify_cauchy_bound(trace: IterationTrace, witness: RateWitness) -> float:
    """Check the geometric-series majorant of the total path length.

    Returns sum of gaps up to the threshold index plus the geometric tail
    gap(nu) * r / (1 - r) and asserts the recorded path length does not
    exceed it (tiny relative slack absorbs summation rounding).
    """
    g = trace.gaps
    if len(g) == 0:
        return 0.0
    nu = witness.threshold_index
    majorant = math.fsum(g[: nu + 1]) + g[nu] * witness.r / (1.0 - witness.r)
    path = math.fsum(g)
    if path > majorant * (1.0 + 1e-12) + 1e-300:
        raise SolverError(
            f"path length {path!r} exceeds the Cauchy majorant {majorant!r}"
        )
    return majorant


def verify_limit_residual(
    map_: SetValuedMap, trace: IterationTrace, triple: CoefficientTriple
) -> float:
    """Recompute D(x*, Tx*) from scratch and assert the terminal contract."""
    if trace.x_star is None:
        raise SolverError("trace has no terminal point")
    image = map_.image(trace.x_star)
    res = point_to_set_distance(map_.space, trace.x_star, image)
    if trace.terminal == CONVERGED:
        if res != 0.0 or trace.x_star not in image:
            raise SolverError(
                f"ConvergedFixedPoint terminal but D(x*,Tx*) = {res!r}; solver bug"
            )
    elif trace.terminal == TOLERANCE:
        if res > trace.tol:
            raise SolverError(
                f"ReachedTolerance terminal but residual {res!r} > tol {trace.tol!r}"
            )
    return res
