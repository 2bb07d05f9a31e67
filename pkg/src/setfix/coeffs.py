"""Piecewise-affine coefficient functions and the derived contraction quantities.

The coefficient functions live on [0, inf), take values in [0, 1), and are
right-continuous with finitely many affine pieces plus a constant tail.
That restriction makes every hypothesis here exactly decidable: affine
pieces attain their extrema at interval endpoints, so checking endpoint
values and one-sided limits settles each strict inequality.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


class CoefficientError(ValueError):
    """Invalid coefficient function or inadmissible triple."""


def _check_arg(t: float) -> float:
    t = float(t)
    if not math.isfinite(t) or t < 0.0:
        raise CoefficientError(f"argument must be a finite nonnegative real, got {t!r}")
    return t


@dataclass(frozen=True)
class PiecewiseAffineFn:
    """Right-continuous piecewise-affine function [0,inf) -> [0,1).

    breakpoints[i] owns the piece on [breakpoints[i], breakpoints[i+1]);
    the constant tail owns [breakpoints[-1], inf).  A single breakpoint 0
    with no pieces is a constant function.
    """

    breakpoints: Tuple[float, ...]
    pieces: Tuple[Tuple[float, float], ...]  # (slope, intercept) per interval
    tail: float

    def __post_init__(self):
        bp = self.breakpoints
        if len(bp) == 0 or bp[0] != 0.0:
            raise CoefficientError("breakpoints must start at 0")
        for a, b in zip(bp, bp[1:]):
            if not (math.isfinite(a) and math.isfinite(b) and a < b):
                raise CoefficientError("breakpoints must be finite and strictly increasing")
        if len(self.pieces) != len(bp) - 1:
            raise CoefficientError(
                f"{len(bp)} breakpoints need {len(bp) - 1} pieces, got {len(self.pieces)}"
            )
        # Range check: attained left endpoint strictly inside [0,1); the
        # right limit may touch 0 or 1 without being attained.
        for i, (slope, intercept) in enumerate(self.pieces):
            if not (math.isfinite(slope) and math.isfinite(intercept)):
                raise CoefficientError("piece coefficients must be finite")
            v0 = slope * bp[i] + intercept
            v1 = slope * bp[i + 1] + intercept
            if not 0.0 <= v0 < 1.0:
                raise CoefficientError(f"piece {i} value {v0!r} at t={bp[i]!r} outside [0,1)")
            if not 0.0 <= v1 <= 1.0:
                raise CoefficientError(f"piece {i} limit {v1!r} at t={bp[i + 1]!r} outside [0,1]")
        if not 0.0 <= self.tail < 1.0:
            raise CoefficientError(f"tail value {self.tail!r} outside [0,1)")

    @classmethod
    def constant(cls, c: float) -> "PiecewiseAffineFn":
        return cls((0.0,), (), float(c))

    def _piece_index(self, t: float) -> int:
        """Index of the piece owning t; len(pieces) means the tail."""
        return bisect_right(self.breakpoints, t) - 1

    def evaluate(self, t: float) -> float:
        t = _check_arg(t)
        i = self._piece_index(t)
        if i >= len(self.pieces):
            return self.tail
        slope, intercept = self.pieces[i]
        return slope * t + intercept

    def right_limsup(self, t: float) -> float:
        """limsup (= limit) of f(s) as s -> t+; equals f(t) by right-continuity."""
        return self.evaluate(_check_arg(t))

    def left_limit(self, t: float) -> float:
        """Limit of f(s) as s -> t-; defined for t > 0."""
        t = _check_arg(t)
        if t == 0.0:
            raise CoefficientError("no left limit at t=0")
        i = bisect_right(self.breakpoints, t) - 1
        if t == self.breakpoints[i]:
            i -= 1  # approach from the previous piece
        if i >= len(self.pieces):
            return self.tail
        slope, intercept = self.pieces[i]
        return slope * t + intercept

    def two_sided_limsup(self, t: float) -> float:
        """limsup of f(s) as s -> t (both sides; right only at t=0)."""
        t = _check_arg(t)
        r = self.right_limsup(t)
        if t == 0.0:
            return r
        return max(r, self.left_limit(t))


def evaluate(f: PiecewiseAffineFn, t: float) -> float:
    return f.evaluate(t)


def right_limsup(f: PiecewiseAffineFn, t: float) -> float:
    return f.right_limsup(t)


@dataclass(frozen=True)
class CoefficientTriple:
    """The three coefficient functions of the generalized contraction bound.

    Construction does not enforce admissibility (the certifier must be able
    to refute bad triples); alpha_prime and the solver require it pointwise.
    """

    alpha: PiecewiseAffineFn
    beta: PiecewiseAffineFn
    gamma: PiecewiseAffineFn

    @classmethod
    def constants(cls, a: float, b: float, g: float) -> "CoefficientTriple":
        return cls(
            PiecewiseAffineFn.constant(a),
            PiecewiseAffineFn.constant(b),
            PiecewiseAffineFn.constant(g),
        )

    def admissibility_sum(self, t: float) -> float:
        """alpha(t) + 2 beta(t) + 2 gamma(t); admissible where this is < 1."""
        return (
            self.alpha.evaluate(t)
            + 2.0 * self.beta.evaluate(t)
            + 2.0 * self.gamma.evaluate(t)
        )

    def merged_breakpoints(self) -> Tuple[float, ...]:
        pts = set(self.alpha.breakpoints) | set(self.beta.breakpoints) | set(self.gamma.breakpoints)
        return tuple(sorted(pts))


def alpha_prime(c: CoefficientTriple, t: float) -> float:
    """The proof's enlarged alpha: (alpha + 1 - 2 beta - 2 gamma) / 2.

    Strictly above alpha(t) and strictly below 1 wherever the triple is
    admissible; rejects inadmissible arguments.
    """
    t = _check_arg(t)
    if c.admissibility_sum(t) >= 1.0:
        raise CoefficientError(
            f"triple inadmissible at t={t!r}: alpha+2beta+2gamma = {c.admissibility_sum(t)!r} >= 1"
        )
    return (c.alpha.evaluate(t) + 1.0 - 2.0 * c.beta.evaluate(t) - 2.0 * c.gamma.evaluate(t)) / 2.0


def contraction_ratio(c: CoefficientTriple, t: float, use_prime: bool = True) -> float:
    """Per-step gap shrink factor (a + beta + gamma) / (1 - (beta + gamma)).

    a is the enlarged alpha when use_prime is set, plain alpha otherwise.
    In [0, 1) for admissible triples when use_prime is set.
    """
    t = _check_arg(t)
    b = c.beta.evaluate(t)
    g = c.gamma.evaluate(t)
    den = 1.0 - (b + g)
    if den <= 0.0:
        raise CoefficientError(f"ratio denominator 1-(beta+gamma) = {den!r} <= 0 at t={t!r}")
    a = alpha_prime(c, t) if use_prime else c.alpha.evaluate(t)
    return (a + b + g) / den


def right_limsup_ratio(c: CoefficientTriple, t: float) -> float:
    """Right limsup of (alpha+beta+gamma)/(1-(beta+gamma)) at t.

    Composed from the coefficient right limits, which is valid because the
    denominator's right limit is positive under admissibility.
    """
    t = _check_arg(t)
    ra = c.alpha.right_limsup(t)
    rb = c.beta.right_limsup(t)
    rg = c.gamma.right_limsup(t)
    den = 1.0 - (rb + rg)
    if den <= 0.0:
        raise CoefficientError(f"ratio denominator right-limit {den!r} <= 0 at t={t!r}")
    return (ra + rb + rg) / den


@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of checking the generalized-theorem coefficient hypotheses."""

    certified: bool
    violation_t: Optional[float]
    violation_quantity: Optional[str]  # "admissibility_sum" | "right_limsup_ratio"
    violation_value: Optional[float]
    probe_grid: Tuple[float, ...]
    max_admissibility_sum: float
    max_ratio: float


def _auto_grid(c: CoefficientTriple, probe_grid: Optional[Sequence[float]]) -> List[float]:
    pts = set() if probe_grid is None else {_check_arg(t) for t in probe_grid}
    bp = c.merged_breakpoints()
    pts.update(bp)
    for u, v in zip(bp, bp[1:]):
        pts.add((u + v) / 2.0)
    pts.add(bp[-1] + 1.0)  # a point inside the tail
    return sorted(pts)


def check_generalized_hypotheses(
    c: CoefficientTriple, probe_grid: Optional[Sequence[float]] = None
) -> HypothesisReport:
    """Certify or refute both coefficient hypotheses of the generalized theorem.

    Checks alpha(t)+2beta(t)+2gamma(t) < 1 for all t and the right-limsup
    ratio < 1 for all t.  Both reduce to an envelope over each affine piece
    of the merged breakpoint grid: the attained left-endpoint value must be
    < 1 and the (unattained) right limit <= 1.  The probe grid is always
    auto-extended with breakpoints and piece midpoints; this is sufficient,
    not heuristic, because affine pieces attain extrema at endpoints.
    """
    grid = _auto_grid(c, probe_grid)
    bp = c.merged_breakpoints()

    def fail(t: float, qty: str, val: float) -> HypothesisReport:
        return HypothesisReport(False, t, qty, val, tuple(grid), max_sum, max_ratio)

    max_sum = 0.0
    max_ratio = 0.0

    def sum_left_limit(v: float) -> float:
        return (
            c.alpha.left_limit(v)
            + 2.0 * c.beta.left_limit(v)
            + 2.0 * c.gamma.left_limit(v)
        )

    # Exact per-piece envelope of the admissibility sum (affine on each piece):
    # the attained left endpoint must be < 1, the unattained right limit <= 1.
    intervals = list(zip(bp, bp[1:])) + [(bp[-1], None)]
    for u, v in intervals:
        s_u = c.admissibility_sum(u)
        max_sum = max(max_sum, s_u)
        if s_u >= 1.0:
            return fail(u, "admissibility_sum", s_u)
        if v is not None:
            s_lim = sum_left_limit(v)
            max_sum = max(max_sum, s_lim)
            if s_lim > 1.0:
                # The sum crosses 1 strictly inside the piece: locate a witness.
                frac = (1.0 - s_u) / (s_lim - s_u)
                t_w = u + frac * (v - u)
                t_w = (min(max(t_w, u), v) + v) / 2.0
                s_w = c.admissibility_sum(t_w)
                if s_w >= 1.0:
                    return fail(t_w, "admissibility_sum", s_w)
    # Ratio condition on the probe grid (equivalent to the sum condition for
    # right-continuous coefficients; evaluated for the report and to catch
    # denominator problems).
    for t in grid:
        try:
            r = right_limsup_ratio(c, t)
        except CoefficientError:
            return fail(t, "right_limsup_ratio", math.inf)
        max_ratio = max(max_ratio, r)
        if r >= 1.0:
            return fail(t, "right_limsup_ratio", r)
    return HypothesisReport(True, None, None, None, tuple(grid), max_sum, max_ratio)
