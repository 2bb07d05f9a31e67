"""Ground-truth brute force for finite instances.

Everything here is deliberately naive and shares no computational helpers
with the metric module: independence is the point.  Also hosts the random
instance generators used by the falsification harness.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .coeffs import CoefficientTriple
from .conditions import CheckReport, SetValuedMap, TableMap
from .metric import CompactSet, FiniteMatrixSpace, MetricSpace, Point
from .solver import IterationTrace


class FalsificationError(AssertionError):
    """A certified instance contradicted the theorem's conclusion."""


@dataclass(frozen=True)
class OracleReport:
    fixed_points: Tuple[Point, ...]
    instance_size: int
    agrees_with: Optional[str] = None


def brute_force_fixed_points(map_: SetValuedMap) -> OracleReport:
    """Enumerate { x : x in T(x) } over a finite-matrix space."""
    if not isinstance(map_.space, FiniteMatrixSpace):
        raise ValueError("brute-force enumeration needs a finite-matrix space")
    fixed = []
    for i in range(map_.space.n):
        members = map_.image(i).elements
        hit = False
        for m in members:
            if m == i:
                hit = True
        if hit:
            fixed.append(i)
    return OracleReport(tuple(fixed), map_.space.n)


def naive_point_set(space: MetricSpace, x: Point, A: CompactSet) -> float:
    """Independent D(x, A): plain double-checked loop, no shared helpers."""
    best = None
    for a in A.elements:
        v = _naive_distance(space, x, a)
        if best is None or v < best:
            best = v
    return best


def naive_hausdorff(space: MetricSpace, A: CompactSet, B: CompactSet) -> float:
    """Independent Hausdorff recomputation by the definition, double loop."""
    h = 0.0
    for a in A.elements:
        best = None
        for b in B.elements:
            v = _naive_distance(space, a, b)
            if best is None or v < best:
                best = v
        if best > h:
            h = best
    for b in B.elements:
        best = None
        for a in A.elements:
            v = _naive_distance(space, b, a)
            if best is None or v < best:
                best = v
        if best > h:
            h = best
    return h


def _naive_distance(space: MetricSpace, x: Point, y: Point) -> float:
    if isinstance(space, FiniteMatrixSpace):
        return float(space.dist[x][y])
    s = 0.0
    for xc, yc in zip(x, y):
        d = xc - yc
        s += d * d
    return math.sqrt(s)


@dataclass(frozen=True)
class CrossValidation:
    passed: bool
    diagnostics: Tuple[str, ...]
    oracle: OracleReport


def cross_validate(
    map_: SetValuedMap,
    triple: CoefficientTriple,
    check: CheckReport,
    trace: Optional[IterationTrace] = None,
    tol: float = 0.0,
) -> CrossValidation:
    """Hold the theorem's conclusion against the brute-force fixed-point set.

    A certified check must come with a nonempty fixed-point set (anything
    else falsifies the theorem on this instance and aborts loudly), and a
    supplied trace must terminate in or within tol of that set.  A violated
    check asserts nothing: failed hypotheses still permit fixed points.
    """
    report = brute_force_fixed_points(map_)
    notes: List[str] = []
    if check.verdict == "certified":
        if not report.fixed_points:
            raise FalsificationError(
                "certified instance has an empty fixed-point set: "
                f"n={report.instance_size}, condition={check.condition!r}"
            )
        notes.append(f"certified: {len(report.fixed_points)} fixed point(s) found")
        if trace is not None:
            if trace.x_star is None:
                return CrossValidation(False, (*notes, "trace has no terminal point"), report)
            if trace.x_star in report.fixed_points:
                notes.append("trace terminal is an exact fixed point")
            else:
                dmin = min(
                    map_.space.distance(trace.x_star, p) for p in report.fixed_points
                )
                if dmin <= tol:
                    notes.append(f"trace terminal within {dmin!r} of a fixed point")
                else:
                    return CrossValidation(
                        False,
                        (*notes, f"trace terminal {trace.x_star!r} is {dmin!r} from the fixed-point set"),
                        report,
                    )
    else:
        notes.append("violated hypotheses: no existence claim made")
    return CrossValidation(True, tuple(notes), report)


# ---------------------------------------------------------------------------
# Random instance generation


def random_metric(rng: random.Random, n: int, low: float = 0.5, high: float = 2.0) -> FiniteMatrixSpace:
    """Random finite metric: shortest-path closure of random symmetric weights.

    The closure is re-passed until it is a fixed point, so the stored matrix
    satisfies the triangle inequality exactly in floating point (rejection
    sampling of raw matrices almost never yields metrics).
    """
    d = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w = rng.uniform(low, high)
            d[i][j] = d[j][i] = w
    changed = True
    while changed:
        changed = False
        for k in range(n):
            for i in range(n):
                dik = d[i][k]
                row_k = d[k]
                row_i = d[i]
                for j in range(n):
                    v = dik + row_k[j]
                    if v < row_i[j]:
                        row_i[j] = v
                        d[j][i] = v
                        changed = True
    return FiniteMatrixSpace(d)


def random_subset(rng: random.Random, n: int, max_size: Optional[int] = None) -> CompactSet:
    size = rng.randint(1, max_size or n)
    return CompactSet.from_points(rng.sample(range(n), min(size, n)))


def random_admissible_constants(rng: random.Random, margin: float = 0.02) -> Tuple[float, float, float]:
    """Random (alpha, beta, gamma) >= 0 with alpha + 2 beta + 2 gamma < 1."""
    total = rng.uniform(0.0, 1.0 - margin)
    u, v = sorted((rng.random(), rng.random()))
    a = total * u
    b = total * (v - u) / 2.0
    g = total * (1.0 - v) / 2.0
    return a, b, g


def random_map(rng: random.Random, space: FiniteMatrixSpace, max_image: int = 3) -> TableMap:
    images = [random_subset(rng, space.n, max_image) for _ in range(space.n)]
    return TableMap(space, images)


def random_contractive_map(rng: random.Random, space: FiniteMatrixSpace) -> TableMap:
    """Random map biased toward certifiable instances.

    Anchored at a random point p with T(p) containing p; other points map to
    {p} or to small sets near the anchor.  Not guaranteed to certify; the
    caller still runs the real checker.
    """
    n = space.n
    p = rng.randrange(n)
    images = []
    for i in range(n):
        if i == p or rng.random() < 0.6:
            images.append(CompactSet.from_points([p]))
        else:
            extra = rng.randrange(n)
            images.append(CompactSet.from_points([p, extra]))
    return TableMap(space, images)
