"""Scenario documents: one self-contained JSON file per run.

Schema (all keys optional except "space" unless a command needs them):

    {
      "space":     {"matrix": [[...], ...]} | {"euclidean": {"dim": k}},
      "map":       {"table": {"0": [indices...], ...}}
                 | {"affine": {"m": [[...]], "b": [...]}}
                 | {"support": [{"x": [...], "image": [[...], ...]}, ...]},
      "condition": {"kind": "nadler", "r": 0.5} | ...,
      "solve":     {"x0": ..., "tol": 1e-9, "max_iter": 10000},
      "sets":      [[point, ...], ...],
      "expect":    {"verdict": ..., "terminal": ..., "fixed_points": [...],
                    "residual_max": ..., "x_star": ...}
    }

Coefficient functions are either {"const": c} or {"breakpoints": [0, ...],
"pieces": [[slope, intercept], ...], "tail": c}.  Parse errors carry the
JSON path of the offending value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from .coeffs import CoefficientError, CoefficientTriple, PiecewiseAffineFn
from .conditions import (
    AffineMap,
    AlphaBetaFunctional,
    ConditionError,
    ConditionKind,
    ConstantGeneralized,
    EuclideanSupportMap,
    Generalized,
    HardyRogers,
    MizoguchiTakahashi,
    Nadler,
    Reich,
    ReichFunctional,
    SetValuedMap,
    TableMap,
)
from .metric import (
    CompactSet,
    EuclideanSpace,
    FiniteMatrixSpace,
    MetricError,
    MetricSpace,
    Point,
    as_point,
)


class ScenarioError(ValueError):
    """Malformed scenario with the JSON path of the problem."""

    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


@dataclass(frozen=True)
class Scenario:
    space: MetricSpace
    map: Optional[SetValuedMap]
    condition: Optional[ConditionKind]
    solve: Optional[Dict[str, Any]]  # {"x0": Point, "tol": float, "max_iter": int}
    sets: Optional[Tuple[CompactSet, ...]]
    expect: Optional[Dict[str, Any]]
    raw: Dict[str, Any]


def _require(obj: Dict[str, Any], key: str, loc: str) -> Any:
    if key not in obj:
        raise ScenarioError(loc, f"missing required key {key!r}")
    return obj[key]


def _parse_fn(spec: Any, loc: str) -> PiecewiseAffineFn:
    if isinstance(spec, (int, float)) and not isinstance(spec, bool):
        return PiecewiseAffineFn.constant(float(spec))
    if not isinstance(spec, dict):
        raise ScenarioError(loc, "coefficient function must be a number or an object")
    try:
        if "const" in spec:
            return PiecewiseAffineFn.constant(float(spec["const"]))
        bps = tuple(float(b) for b in _require(spec, "breakpoints", loc))
        pieces = tuple(
            (float(s), float(c)) for s, c in _require(spec, "pieces", loc)
        )
        tail = float(_require(spec, "tail", loc))
        return PiecewiseAffineFn(bps, pieces, tail)
    except (TypeError, ValueError) as e:
        if isinstance(e, ScenarioError):
            raise
        raise ScenarioError(loc, str(e)) from e


def _parse_space(spec: Any, loc: str = "space") -> MetricSpace:
    if not isinstance(spec, dict):
        raise ScenarioError(loc, "space must be an object")
    if "matrix" in spec:
        try:
            return FiniteMatrixSpace(spec["matrix"])
        except (MetricError, TypeError, ValueError) as e:
            raise ScenarioError(f"{loc}.matrix", str(e)) from e
    if "euclidean" in spec:
        dim = _require(spec["euclidean"], "dim", f"{loc}.euclidean")
        try:
            return EuclideanSpace(int(dim))
        except (MetricError, TypeError, ValueError) as e:
            raise ScenarioError(f"{loc}.euclidean.dim", str(e)) from e
    raise ScenarioError(loc, "space needs either 'matrix' or 'euclidean'")


def _parse_map(spec: Any, space: MetricSpace, loc: str = "map") -> SetValuedMap:
    if not isinstance(spec, dict):
        raise ScenarioError(loc, "map must be an object")
    try:
        if "table" in spec:
            if not isinstance(space, FiniteMatrixSpace):
                raise ScenarioError(f"{loc}.table", "table maps need a matrix space")
            table = spec["table"]
            images: List[CompactSet] = []
            for i in range(space.n):
                key = str(i)
                if key not in table:
                    raise ScenarioError(f"{loc}.table.{key}", "map must be total over all points")
                images.append(CompactSet.from_points(int(j) for j in table[key]))
            return TableMap(space, images)
        if "affine" in spec:
            if not isinstance(space, EuclideanSpace):
                raise ScenarioError(f"{loc}.affine", "affine maps need a Euclidean space")
            aff = spec["affine"]
            return AffineMap(space, _require(aff, "m", f"{loc}.affine"), _require(aff, "b", f"{loc}.affine"))
        if "support" in spec:
            if not isinstance(space, EuclideanSpace):
                raise ScenarioError(f"{loc}.support", "support maps need a Euclidean space")
            table = {}
            for k, entry in enumerate(spec["support"]):
                x = as_point(space, _require(entry, "x", f"{loc}.support[{k}]"))
                img = CompactSet.from_points(
                    as_point(space, p) for p in _require(entry, "image", f"{loc}.support[{k}]")
                )
                table[x] = img
            return EuclideanSupportMap(space, table)
    except ScenarioError:
        raise
    except (MetricError, ConditionError, TypeError, ValueError) as e:
        raise ScenarioError(loc, str(e)) from e
    raise ScenarioError(loc, "map needs 'table', 'affine', or 'support'")


_KIND_NAMES = {
    "nadler": "nadler",
    "mizoguchi_takahashi": "mizoguchi_takahashi",
    "reich": "reich",
    "hardy_rogers": "hardy_rogers",
    "constant_generalized": "constant_generalized",
    "generalized": "generalized",
    "reich_functional": "reich_functional",
    "alpha_beta_functional": "alpha_beta_functional",
}


def _parse_condition(spec: Any, loc: str = "condition") -> ConditionKind:
    if not isinstance(spec, dict):
        raise ScenarioError(loc, "condition must be an object")
    kind = _require(spec, "kind", loc)
    try:
        if kind == "nadler":
            return Nadler(float(_require(spec, "r", loc)))
        if kind == "mizoguchi_takahashi":
            return MizoguchiTakahashi(_parse_fn(_require(spec, "alpha", loc), f"{loc}.alpha"))
        if kind == "reich":
            return Reich(float(_require(spec, "beta", loc)))
        if kind == "hardy_rogers":
            return HardyRogers(
                float(_require(spec, "alpha", loc)),
                float(_require(spec, "beta", loc)),
                float(_require(spec, "gamma", loc)),
            )
        if kind == "constant_generalized":
            return ConstantGeneralized(
                float(_require(spec, "alpha", loc)),
                float(_require(spec, "beta", loc)),
                float(_require(spec, "gamma", loc)),
            )
        if kind == "generalized":
            return Generalized(
                CoefficientTriple(
                    _parse_fn(_require(spec, "alpha", loc), f"{loc}.alpha"),
                    _parse_fn(_require(spec, "beta", loc), f"{loc}.beta"),
                    _parse_fn(_require(spec, "gamma", loc), f"{loc}.gamma"),
                )
            )
        if kind == "reich_functional":
            return ReichFunctional(_parse_fn(_require(spec, "beta", loc), f"{loc}.beta"))
        if kind == "alpha_beta_functional":
            return AlphaBetaFunctional(
                _parse_fn(_require(spec, "alpha", loc), f"{loc}.alpha"),
                _parse_fn(_require(spec, "beta", loc), f"{loc}.beta"),
            )
    except ScenarioError:
        raise
    except (ConditionError, CoefficientError, TypeError, ValueError) as e:
        raise ScenarioError(loc, str(e)) from e
    raise ScenarioError(
        f"{loc}.kind", f"unknown kind {kind!r}; expected one of {sorted(_KIND_NAMES)}"
    )


def parse_scenario(text: str) -> Scenario:
    """Parse and fully validate a scenario document (UTF-8 JSON)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioError(f"line {e.lineno}, column {e.colno}", e.msg) from e
    if not isinstance(doc, dict):
        raise ScenarioError("$", "scenario must be a JSON object")
    space = _parse_space(_require(doc, "space", "$"))
    map_ = _parse_map(doc["map"], space) if "map" in doc else None
    condition = _parse_condition(doc["condition"]) if "condition" in doc else None
    solve = None
    if "solve" in doc:
        s = doc["solve"]
        if not isinstance(s, dict):
            raise ScenarioError("solve", "solve must be an object")
        try:
            x0 = as_point(space, _require(s, "x0", "solve"))
        except MetricError as e:
            raise ScenarioError("solve.x0", str(e)) from e
        tol = float(s.get("tol", 1e-9))
        max_iter = int(s.get("max_iter", 10_000))
        if tol <= 0.0:
            raise ScenarioError("solve.tol", f"tol must be positive, got {tol!r}")
        if max_iter < 1:
            raise ScenarioError("solve.max_iter", f"max_iter must be >= 1, got {max_iter!r}")
        solve = {"x0": x0, "tol": tol, "max_iter": max_iter}
    sets = None
    if "sets" in doc:
        try:
            sets = tuple(
                CompactSet.from_points(as_point(space, p) for p in entry)
                for entry in doc["sets"]
            )
        except (MetricError, TypeError, ValueError) as e:
            raise ScenarioError("sets", str(e)) from e
        if not sets:
            raise ScenarioError("sets", "at least one set is required")
    expect = doc.get("expect")
    if expect is not None and not isinstance(expect, dict):
        raise ScenarioError("expect", "expect must be an object")
    return Scenario(space, map_, condition, solve, sets, expect, doc)


def scenario_to_dict(sc: Scenario) -> Dict[str, Any]:
    """Raw document of a parsed scenario (round-trips through parse_scenario)."""
    return sc.raw
