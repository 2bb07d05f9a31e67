"""Command-line interface: check / solve / oracle / hausdorff on scenario files.

Exit codes: 0 = certified/converged/expectations met, 1 = violated/diverged/
expectation mismatch, 2 = input error.  JSON is the canonical output; CSV is
offered only for the gap/bound columns of solve traces.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, Optional

from . import solver
from .coeffs import CoefficientError, check_generalized_hypotheses
from .conditions import (
    CheckReport,
    ConditionError,
    EuclideanSupportMap,
    as_generalized,
    check_condition,
)
from .metric import FiniteMatrixSpace, MetricError, hausdorff_distance
from .oracle import FalsificationError, brute_force_fixed_points, cross_validate
from .scenario import Scenario, ScenarioError, parse_scenario

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _point_json(p):
    return p if isinstance(p, int) else list(p)


def _kind_json(kind) -> Dict[str, Any]:
    def fn_json(f):
        if not f.pieces:
            return {"const": f.tail}
        return {
            "breakpoints": list(f.breakpoints),
            "pieces": [list(p) for p in f.pieces],
            "tail": f.tail,
        }

    name = type(kind).__name__
    out: Dict[str, Any] = {"kind": name}
    for field in ("r", "alpha", "beta", "gamma"):
        if hasattr(kind, field):
            v = getattr(kind, field)
            out[field] = fn_json(v) if hasattr(v, "pieces") else v
    if hasattr(kind, "triple"):
        t = kind.triple
        out.update(alpha=fn_json(t.alpha), beta=fn_json(t.beta), gamma=fn_json(t.gamma))
    return out


def _check_report_json(report: CheckReport) -> Dict[str, Any]:
    w = report.witness
    return {
        "verdict": report.verdict,
        "witness": None
        if w is None
        else {"x": _point_json(w.x), "y": _point_json(w.y), "lhs": w.lhs, "rhs": w.rhs},
        "pairs_checked": report.pairs_checked,
        "condition": _kind_json(report.condition),
        "probe_relative": report.probe_relative,
        "limsup_form": report.limsup_form,
    }


def _trace_json(trace: solver.IterationTrace, majorant: Optional[float]) -> Dict[str, Any]:
    rate = trace.rate
    return {
        "terminal": trace.terminal,
        "points": [_point_json(p) for p in trace.points],
        "gaps": list(trace.gaps),
        "step_bounds": list(trace.step_bounds),
        "rate": None
        if rate is None
        else {
            "r": rate.r,
            "epsilon": rate.epsilon,
            "threshold_index": rate.threshold_index,
            "tau_estimate": rate.tau_estimate,
        },
        "x_star": None if trace.x_star is None else _point_json(trace.x_star),
        "residual": trace.residual,
        "iterations": len(trace.gaps),
        "tol": trace.tol,
        "cauchy_majorant": majorant,
    }


def _emit(report: Dict[str, Any], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(report, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        if "gaps" in report:
            out.write("step,gap,step_bound\n")
            for i, (g, b) in enumerate(zip(report["gaps"], report["step_bounds"])):
                out.write(f"{i},{g!r},{b!r}\n")
        else:
            out.write("key,value\n")
            for k, v in report.items():
                if not isinstance(v, (dict, list)):
                    out.write(f"{k},{v}\n")
    else:
        _emit_text(report, out)


def _emit_text(report: Dict[str, Any], out, indent: str = "") -> None:
    for k, v in report.items():
        if isinstance(v, dict):
            out.write(f"{indent}{k}:\n")
            _emit_text(v, out, indent + "  ")
        elif isinstance(v, list) and len(v) > 12:
            out.write(f"{indent}{k}: [{len(v)} values] {v[:4]} ... {v[-2:]}\n")
        else:
            out.write(f"{indent}{k}: {v}\n")


def _expectations_met(expect: Optional[Dict[str, Any]], report: Dict[str, Any]) -> bool:
    """Compare the expectations relevant to this command's report."""
    if not expect:
        return True
    for key in ("verdict", "terminal", "x_star"):
        if key in expect and key in report and report[key] != expect[key]:
            return False
    if "fixed_points" in expect and "fixed_points" in report:
        if report["fixed_points"] != list(expect["fixed_points"]):
            return False
    if "residual_max" in expect and "residual" in report:
        res = report["residual"]
        if res is None or res > float(expect["residual_max"]):
            return False
    return True


def _cmd_check(sc: Scenario) -> Dict[str, Any]:
    if sc.map is None or sc.condition is None:
        raise ScenarioError("$", "check needs 'map' and 'condition'")
    triple = as_generalized(sc.condition)
    hyp = check_generalized_hypotheses(triple)
    report = check_condition(sc.map, sc.condition)
    out = _check_report_json(report)
    out["hypothesis"] = {
        "certified": hyp.certified,
        "violation_t": hyp.violation_t,
        "violation_quantity": hyp.violation_quantity,
        "max_admissibility_sum": hyp.max_admissibility_sum,
        "max_ratio": hyp.max_ratio,
    }
    return out


def _cmd_solve(sc: Scenario, tol: Optional[float], max_iter: Optional[int]) -> Dict[str, Any]:
    if sc.map is None or sc.condition is None or sc.solve is None:
        raise ScenarioError("$", "solve needs 'map', 'condition', and 'solve'")
    triple = as_generalized(sc.condition)
    hyp = check_generalized_hypotheses(triple)
    if not hyp.certified:
        raise ScenarioError(
            "condition",
            f"coefficient hypotheses violated at t={hyp.violation_t!r}; cannot solve",
        )
    trace = solver.iterate(
        sc.map,
        triple,
        sc.solve["x0"],
        tol if tol is not None else sc.solve["tol"],
        max_iter if max_iter is not None else sc.solve["max_iter"],
    )
    majorant = None
    if trace.rate is not None:
        majorant = solver.verify_cauchy_bound(trace, trace.rate)
    out = _trace_json(trace, majorant)
    out["converged"] = trace.terminal in (solver.CONVERGED, solver.TOLERANCE)
    return out


def _cmd_oracle(sc: Scenario) -> Dict[str, Any]:
    if sc.map is None:
        raise ScenarioError("$", "oracle needs 'map'")
    if not isinstance(sc.space, FiniteMatrixSpace):
        raise ScenarioError("space", "oracle needs a finite matrix space")
    report = brute_force_fixed_points(sc.map)
    out: Dict[str, Any] = {
        "fixed_points": [_point_json(p) for p in report.fixed_points],
        "instance_size": report.instance_size,
    }
    if sc.condition is not None:
        triple = as_generalized(sc.condition)
        check = check_condition(sc.map, sc.condition)
        cv = cross_validate(sc.map, triple, check)
        out["check_verdict"] = check.verdict
        out["cross_validation"] = {"passed": cv.passed, "diagnostics": list(cv.diagnostics)}
    return out


def _cmd_hausdorff(sc: Scenario) -> Dict[str, Any]:
    if not sc.sets:
        raise ScenarioError("$", "hausdorff needs 'sets'")
    m = [
        [hausdorff_distance(sc.space, a, b) for b in sc.sets]
        for a in sc.sets
    ]
    return {
        "sets": [[_point_json(p) for p in s.elements] for s in sc.sets],
        "hausdorff_matrix": m,
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="setfix",
        description="Fixed points of set-valued contraction maps: certify, solve, cross-check.",
    )
    parser.add_argument(
        "command", choices=["check", "solve", "oracle", "hausdorff"], help="what to run"
    )
    parser.add_argument("--scenario", required=True, help="path to a scenario JSON file")
    parser.add_argument("--format", choices=["json", "csv", "text"], default="json")
    parser.add_argument("--tol", type=float, default=None, help="override solve tolerance")
    parser.add_argument("--max-iter", type=int, default=None, help="override iteration budget")
    args = parser.parse_args(argv)

    try:
        with open(args.scenario, encoding="utf-8") as fh:
            sc = parse_scenario(fh.read())
        if args.command == "check":
            report = _cmd_check(sc)
            success = report["verdict"] == "certified" and report["hypothesis"]["certified"]
        elif args.command == "solve":
            report = _cmd_solve(sc, args.tol, args.max_iter)
            success = report["converged"]
        elif args.command == "oracle":
            report = _cmd_oracle(sc)
            success = report.get("cross_validation", {"passed": True})["passed"]
        else:
            report = _cmd_hausdorff(sc)
            success = True
    except (ScenarioError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (MetricError, ConditionError, CoefficientError, solver.SolverError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except FalsificationError as e:
        print(f"FALSIFICATION: {e}", file=sys.stderr)
        return EXIT_FAIL

    _emit(report, args.format, sys.stdout)
    if sc.expect:
        # Explicit expectations decide the exit code: a scenario may expect a
        # violation or a budget exit and still count as a successful run.
        if _expectations_met(sc.expect, report):
            return EXIT_OK
        print("expectation mismatch", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK if success else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
