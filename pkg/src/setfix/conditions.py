"""Contraction-condition certifiers: exhaustive pair checking on finite maps.

Each condition kind carries its own right-hand-side formula, written as the
corresponding theorem states it; as_generalized embeds every kind into the
three-coefficient form.  Certificates mean the inequality literally held
(exact float comparison, no slack) on every unordered pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from .coeffs import (
    CoefficientError,
    CoefficientTriple,
    PiecewiseAffineFn,
    check_generalized_hypotheses,
)
from .metric import (
    CompactSet,
    EuclideanSpace,
    FiniteMatrixSpace,
    MetricError,
    MetricSpace,
    Point,
    hausdorff_distance,
    point_to_set_distance,
)


class ConditionError(ValueError):
    """Invalid condition parameters or an uncheckable map."""


# ---------------------------------------------------------------------------
# Set-valued maps


class TableMap:
    """Map on a finite-matrix space: one CompactSet image per point index."""

    def __init__(self, space: FiniteMatrixSpace, images: Sequence[CompactSet]):
        if len(images) != space.n:
            raise ConditionError(f"map must be total: {len(images)} images for {space.n} points")
        for img in images:
            for p in img.elements:
                space.validate_point(p)
        self.space = space
        self.images = tuple(images)
        self._index_arrays = [np.asarray(img.elements, dtype=np.intp) for img in self.images]

    def image(self, x: Point) -> CompactSet:
        self.space.validate_point(x)
        return self.images[x]


class EuclideanSupportMap:
    """Map on a Euclidean space defined on a finite support set of points."""

    def __init__(self, space: EuclideanSpace, table: Dict[Point, CompactSet]):
        if not table:
            raise ConditionError("support table must be nonempty")
        for x, img in table.items():
            space.validate_point(x)
            for p in img.elements:
                space.validate_point(p)
        self.space = space
        self.table = dict(table)

    @property
    def support(self) -> Tuple[Point, ...]:
        return tuple(sorted(self.table))

    def image(self, x: Point) -> CompactSet:
        try:
            return self.table[x]
        except KeyError:
            raise ConditionError(f"point {x!r} outside the map's support") from None


class AffineMap:
    """Single-valued affine rule x -> {M x + b} on a Euclidean space."""

    def __init__(self, space: EuclideanSpace, m: Sequence[Sequence[float]], b: Sequence[float]):
        mm = np.asarray(m, dtype=np.float64)
        bb = np.asarray(b, dtype=np.float64)
        if mm.shape != (space.dim, space.dim) or bb.shape != (space.dim,):
            raise ConditionError(
                f"affine rule needs a {space.dim}x{space.dim} matrix and length-{space.dim} offset"
            )
        if not (np.all(np.isfinite(mm)) and np.all(np.isfinite(bb))):
            raise ConditionError("affine rule coefficients must be finite")
        self.space = space
        self.m = mm
        self.b = bb

    def image(self, x: Point) -> CompactSet:
        self.space.validate_point(x)
        y = tuple(float(v) for v in self.m @ np.asarray(x, dtype=np.float64) + self.b)
        return CompactSet((y,))


SetValuedMap = Union[TableMap, EuclideanSupportMap, AffineMap]


# ---------------------------------------------------------------------------
# Condition kinds


@dataclass(frozen=True)
class Nadler:
    r: float

    def __post_init__(self):
        if not 0.0 <= self.r < 1.0:
            raise ConditionError(f"Nadler coefficient must be in [0,1), got {self.r!r}")


@dataclass(frozen=True)
class MizoguchiTakahashi:
    alpha: PiecewiseAffineFn


@dataclass(frozen=True)
class Reich:
    beta: float

    def __post_init__(self):
        if not 0.0 <= self.beta < 0.5:
            raise ConditionError(f"Reich coefficient must be in [0,1/2), got {self.beta!r}")


@dataclass(frozen=True)
class HardyRogers:
    """Single-valued three-constant condition (requires singleton images)."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        _check_constants(self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class ConstantGeneralized:
    """Set-valued three-constant condition."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        _check_constants(self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class Generalized:
    triple: CoefficientTriple

    def __post_init__(self):
        report = check_generalized_hypotheses(self.triple)
        if not report.certified:
            raise ConditionError(
                f"coefficient triple violates hypotheses at t={report.violation_t!r} "
                f"({report.violation_quantity} = {report.violation_value!r})"
            )


@dataclass(frozen=True)
class ReichFunctional:
    """Functional Reich condition; beta maps into [0,1/2) with two-sided limsup < 1/2."""

    beta: PiecewiseAffineFn

    def __post_init__(self):
        _check_below_half(self.beta)


@dataclass(frozen=True)
class AlphaBetaFunctional:
    """Two-function condition: alpha(t) + 2 beta(t) < 1 with right-limsup ratio < 1."""

    alpha: PiecewiseAffineFn
    beta: PiecewiseAffineFn

    def __post_init__(self):
        triple = CoefficientTriple(self.alpha, self.beta, PiecewiseAffineFn.constant(0.0))
        report = check_generalized_hypotheses(triple)
        if not report.certified:
            raise ConditionError(
                f"alpha+2beta violates hypotheses at t={report.violation_t!r}"
            )


ConditionKind = Union[
    Nadler,
    MizoguchiTakahashi,
    Reich,
    HardyRogers,
    ConstantGeneralized,
    Generalized,
    ReichFunctional,
    AlphaBetaFunctional,
]


def _check_constants(a: float, b: float, g: float) -> None:
    for name, v in (("alpha", a), ("beta", b), ("gamma", g)):
        if not (math.isfinite(v) and v >= 0.0):
            raise ConditionError(f"{name} must be a finite nonnegative real, got {v!r}")
    if a + 2.0 * b + 2.0 * g >= 1.0:
        raise ConditionError(f"constants inadmissible: alpha+2beta+2gamma = {a + 2 * b + 2 * g!r} >= 1")


def _check_below_half(beta: PiecewiseAffineFn) -> None:
    """beta(t) < 1/2 at attained endpoints and two-sided limits <= 1/2 everywhere."""
    bp = beta.breakpoints
    for i, t in enumerate(bp):
        v = beta.evaluate(t)
        if v >= 0.5:
            raise ConditionError(f"beta({t!r}) = {v!r} >= 1/2")
        if t > 0.0 and beta.left_limit(t) > 0.5:
            raise ConditionError(f"left limit of beta at {t!r} exceeds 1/2")
        if i + 1 < len(bp) and beta.left_limit(bp[i + 1]) > 0.5:
            raise ConditionError(f"beta approaches >= 1/2 before t={bp[i + 1]!r}")
    if beta.tail >= 0.5:
        raise ConditionError(f"beta tail {beta.tail!r} >= 1/2")


_ZERO = PiecewiseAffineFn.constant(0.0)


def as_generalized(kind: ConditionKind) -> CoefficientTriple:
    """Embed any condition kind into the three-coefficient generalized form."""
    if isinstance(kind, Nadler):
        return CoefficientTriple(PiecewiseAffineFn.constant(kind.r), _ZERO, _ZERO)
    if isinstance(kind, MizoguchiTakahashi):
        return CoefficientTriple(kind.alpha, _ZERO, _ZERO)
    if isinstance(kind, Reich):
        return CoefficientTriple(_ZERO, PiecewiseAffineFn.constant(kind.beta), _ZERO)
    if isinstance(kind, (HardyRogers, ConstantGeneralized)):
        return CoefficientTriple.constants(kind.alpha, kind.beta, kind.gamma)
    if isinstance(kind, Generalized):
        return kind.triple
    if isinstance(kind, ReichFunctional):
        return CoefficientTriple(_ZERO, kind.beta, _ZERO)
    if isinstance(kind, AlphaBetaFunctional):
        return CoefficientTriple(kind.alpha, kind.beta, _ZERO)
    raise ConditionError(f"unknown condition kind {kind!r}")


def rhs_bound(kind: ConditionKind, d: float, dxtx: float, dyty: float, dxty: float, dytx: float) -> float:
    """Right-hand side of the kind's inequality, written per its own statement."""
    if isinstance(kind, Nadler):
        return kind.r * d
    if isinstance(kind, MizoguchiTakahashi):
        return kind.alpha.evaluate(d) * d
    if isinstance(kind, Reich):
        return kind.beta * (dxtx + dyty)
    if isinstance(kind, (HardyRogers, ConstantGeneralized)):
        return kind.alpha * d + kind.beta * (dxtx + dyty) + kind.gamma * (dxty + dytx)
    if isinstance(kind, Generalized):
        t = kind.triple
        return (
            t.alpha.evaluate(d) * d
            + t.beta.evaluate(d) * (dxtx + dyty)
            + t.gamma.evaluate(d) * (dxty + dytx)
        )
    if isinstance(kind, ReichFunctional):
        return kind.beta.evaluate(d) * (dxtx + dyty)
    if isinstance(kind, AlphaBetaFunctional):
        return kind.alpha.evaluate(d) * d + kind.beta.evaluate(d) * (dxtx + dyty)
    raise ConditionError(f"unknown condition kind {kind!r}")


def limsup_form(kind: ConditionKind) -> str:
    """Which limsup form the kind's coefficient hypothesis uses."""
    return "two-sided" if isinstance(kind, ReichFunctional) else "right"


# ---------------------------------------------------------------------------
# Checking


@dataclass(frozen=True)
class Witness:
    x: Point
    y: Point
    lhs: float
    rhs: float


@dataclass(frozen=True)
class CheckReport:
    verdict: str  # "certified" | "violated"
    witness: Optional[Witness]
    pairs_checked: int
    condition: ConditionKind
    probe_relative: bool = False
    limsup_form: str = "right"

    @property
    def certified(self) -> bool:
        return self.verdict == "certified"


def _pair_terms(map_: SetValuedMap, x: Point, y: Point, images: Dict[Point, CompactSet]):
    space = map_.space
    tx, ty = images[x], images[y]
    d = space.distance(x, y)
    lhs = hausdorff_distance(space, tx, ty)
    dxtx = point_to_set_distance(space, x, tx)
    dyty = point_to_set_distance(space, y, ty)
    dxty = point_to_set_distance(space, x, ty)
    dytx = point_to_set_distance(space, y, tx)
    return d, lhs, dxtx, dyty, dxty, dytx


def check_condition(
    map_: SetValuedMap,
    kind: ConditionKind,
    probe_points: Optional[Sequence[Point]] = None,
) -> CheckReport:
    """Exhaustively check H(Tx,Ty) <= rhs over unordered point pairs.

    Finite-matrix maps are checked over all n*(n-1)/2 pairs; Euclidean maps
    need a finite probe set (support-table maps default to their support)
    and the verdict is then probe-relative.  The first violating pair in
    canonical order is the witness.
    """
    space = map_.space
    probe_relative = False
    if isinstance(space, FiniteMatrixSpace):
        points: Sequence[Point] = range(space.n)
    else:
        if probe_points is not None:
            points = sorted(probe_points)
            probe_relative = True
        elif isinstance(map_, EuclideanSupportMap):
            points = map_.support
            probe_relative = True
        else:
            raise ConditionError(
                "Euclidean maps are not exhaustively checkable; supply probe_points"
            )
    points = list(points)
    images = {x: map_.image(x) for x in points}
    pairs = 0
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            x, y = points[i], points[j]
            pairs += 1
            d, lhs, dxtx, dyty, dxty, dytx = _pair_terms(map_, x, y, images)
            rhs = rhs_bound(kind, d, dxtx, dyty, dxty, dytx)
            if lhs > rhs:
                return CheckReport(
                    "violated", Witness(x, y, lhs, rhs), pairs, kind,
                    probe_relative, limsup_form(kind),
                )
    return CheckReport("certified", None, pairs, kind, probe_relative, limsup_form(kind))


def check_single_valued_hardy_rogers(
    map_: SetValuedMap,
    alpha: float,
    beta: float,
    gamma: float,
    probe_points: Optional[Sequence[Point]] = None,
) -> CheckReport:
    """Three-constant single-valued check: every image must be a singleton."""
    kind = HardyRogers(alpha, beta, gamma)
    space = map_.space
    if isinstance(space, FiniteMatrixSpace):
        points: Sequence[Point] = list(range(space.n))
    elif probe_points is not None:
        points = sorted(probe_points)
    elif isinstance(map_, EuclideanSupportMap):
        points = map_.support
    else:
        raise ConditionError("Euclidean maps need probe_points")
    tx = {}
    for x in points:
        img = map_.image(x)
        if len(img) != 1:
            raise ConditionError(f"image of {x!r} is not a singleton")
        tx[x] = img.elements[0]
    pairs = 0
    probe_relative = not isinstance(space, FiniteMatrixSpace)
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            x, y = points[i], points[j]
            pairs += 1
            d = space.distance(x, y)
            lhs = space.distance(tx[x], tx[y])
            rhs = (
                alpha * d
                + beta * (space.distance(x, tx[x]) + space.distance(y, tx[y]))
                + gamma * (space.distance(x, tx[y]) + space.distance(y, tx[x]))
            )
            if lhs > rhs:
                return CheckReport("violated", Witness(x, y, lhs, rhs), pairs, kind, probe_relative)
    return CheckReport("certified", None, pairs, kind, probe_relative)
