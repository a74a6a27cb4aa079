"""Command-line front end.

stdout carries JSON only; diagnostics go to stderr.  Exit codes:
0 success, 2 query point not interior, 3 unreadable or invalid input,
4 numerical failure, 5 a verification check failed.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import hrep, lp, oracle, verify, vrep
from .core import ZERO_TOL, HPolyhedron, NormSpec, VPolytope
from .errors import (InvalidInputError, LpFailure, NotInteriorError,
                     NumericalBreakdown, RadiusHintViolation)
from .io import ProblemFile, result_to_dict

EXIT_OK = 0
EXIT_NOT_INTERIOR = 2
EXIT_PARSE = 3
EXIT_NUMERICAL = 4
EXIT_CHECK_FAILED = 5


def project_problem(prob: ProblemFile, spec: NormSpec = None):
    body = prob.body()
    spec = spec or prob.norm_spec()
    if isinstance(body, HPolyhedron):
        return body, hrep.hrep_project(body, prob.point, spec)
    if isinstance(body, VPolytope):
        return body, vrep.vrep_project(body, prob.point, spec)
    return body, oracle.oracle_project(body, prob.point, spec)


def tolerances():
    return {"zero": ZERO_TOL, "lp_feasibility": lp.FEAS_TOL,
            "lp_pivot": lp.PIVOT_TOL, "lp_optimality": lp.OPT_TOL,
            "bisection": oracle.BISECT_TOL, "e_set_slack": verify.E_SET_SLACK,
            "ray_sampling": verify.RAY_TOL}


def _load(path):
    with (sys.stdin if path == "-" else open(path)) as fh:
        return ProblemFile.from_dict(json.load(fh))


def _emit(payload, args):
    if args.tolerance_report:
        payload["tolerances"] = tolerances()
    json.dump(payload, sys.stdout, indent=2, allow_nan=False)
    sys.stdout.write("\n")


def cmd_project(args) -> int:
    prob = _load(args.input)
    _, result = project_problem(prob)
    _emit(result_to_dict(result), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    prob = _load(args.input)
    exponent = None
    spec = prob.norm_spec()
    if args.p is not None:
        if args.p > 1:
            exponent = args.p
        else:
            spec = NormSpec(args.p, prob.weights)
    body, result = project_problem(prob, spec)
    report = verify.verify_projection(body, result, spec, args.samples,
                                      args.seed, args.inflate, exponent)
    payload = {"result": result_to_dict(result), **report.to_dict()}
    _emit(payload, args)
    for c in report.checks:
        if not c.passed:
            print(f"check failed: {c.name}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="l1boundary",
        description="Minimum L1 (weighted Lp, p <= 1) distance from an "
                    "interior point to the boundary of a convex set.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="problem JSON file, or - for stdin")
        p.add_argument("--tolerance-report", action="store_true",
                       help="include the numeric tolerances in the output")
        p.add_argument("--samples", type=int, default=10_000,
                       help="random directions for the ray check")
        p.add_argument("--seed", type=int, default=0)

    p_proj = sub.add_parser("project", help="compute the projection")
    common(p_proj)
    p_proj.set_defaults(func=cmd_project)

    p_ver = sub.add_parser("verify", help="project and cross-check the answer")
    common(p_ver)
    p_ver.add_argument("--p", type=float, default=None,
                       help="exponent override; values above 1 only affect "
                            "the ray check")
    p_ver.add_argument("--inflate", type=float, default=1.0,
                       help=argparse.SUPPRESS)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotInteriorError:
        print("error: query point is not interior", file=sys.stderr)
        return EXIT_NOT_INTERIOR
    except (OSError, json.JSONDecodeError, InvalidInputError) as exc:
        print(f"error: cannot read problem: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NumericalBreakdown, LpFailure, RadiusHintViolation) as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
