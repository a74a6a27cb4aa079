"""Brute-force checks that do not rely on the single-axis shortcut.

* :func:`facet_l1_oracle` solves one LP per constraint row: the least
  weighted L1 move from the query point onto that row's face.
* :func:`theorem1_E_set_check` tests the cross-polytope argument on an
  instance: all ``2n`` axis points at the reported distance lie in the
  closed set, and at least one of them is on its boundary.
* :func:`ray_sampling_check` shoots random rays to the boundary and makes
  sure none of them is cheaper than the reported distance.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .core import (L1, HPolyhedron, NormSpec, ProjectionResult, VPolytope,
                   as_point, axis_order)
from .errors import (DomainError, GlobalityViolation, LpFailure,
                     NotInteriorError, NumericalBreakdown,
                     ProofInvariantViolation)
from .lp import LpProblem, solve
from .oracle import ConvexBody, ray_boundary_bisect, vrep_contains
from .vrep import ray_lambda, vrep_translate

E_SET_SLACK = 1e-7
RAY_TOL = 1e-6

Body = Union[HPolyhedron, VPolytope, ConvexBody]


@dataclass
class FacetOracleResult:
    distance: float
    facet: int
    point: np.ndarray
    per_facet: List[float]
    skipped: List[int] = field(default_factory=list)


def facet_l1_oracle(P: HPolyhedron, a, spec: NormSpec = L1) -> FacetOracleResult:
    """Least weighted-L1 distance from ``a`` to any face ``{a_i x = b_i} & P``.

    Per row ``i``: minimise ``w . (u + v)`` subject to ``A (a + u - v) <= b``,
    ``a_i (a + u - v) = b_i``, ``u, v >= 0``.  Rows whose hyperplane misses
    ``P`` are infeasible and reported in ``skipped``.
    """
    if spec.p != 1.0:
        raise DomainError("the facet LP oracle needs p = 1")
    a = as_point(a)
    n = P.dim
    w = spec.weights_for(n)
    shifted = P.b - P.A @ a
    if not np.all(shifted > 0):
        raise NotInteriorError()
    A_ub = np.hstack([P.A, -P.A])
    c = -np.concatenate([w, w])
    per_facet, skipped = [], []
    best, best_i, best_z = math.inf, -1, None
    for i in range(P.n_constraints):
        prob = LpProblem(c, A_ub[i:i + 1], shifted[i:i + 1], A_ub, shifted)
        try:
            sol = solve(prob)
        except NumericalBreakdown as exc:
            raise LpFailure(f"facet {i}: {exc}") from exc
        if not sol.optimal:
            per_facet.append(math.inf)
            skipped.append(i)
            continue
        d = -sol.objective_value
        per_facet.append(d)
        if best_z is None or d < best - 1e-9 * max(1.0, best):
            best, best_i, best_z = d, i, sol.primal
    if best_z is None:
        raise LpFailure("no facet LP was feasible")
    point = a + best_z[:n] - best_z[n:]
    return FacetOracleResult(best, best_i, point, per_facet, skipped)


def membership_of(body: Body) -> Callable[[np.ndarray], bool]:
    if isinstance(body, HPolyhedron):
        return body.contains
    if isinstance(body, VPolytope):
        return lambda x: vrep_contains(body, x)
    return body.membership


@dataclass
class ESetReport:
    distance: float
    points: List[List[float]]
    in_closure: List[bool]
    on_boundary: List[bool]
    passed: bool
    message: str = ""

    def to_dict(self):
        return asdict(self)


def theorem1_E_set_check(body: Body, a, distance: float, spec: NormSpec = L1,
                         slack: float = E_SET_SLACK,
                         raise_on_failure: bool = True) -> ESetReport:
    """Check the ``2n`` axis points at cost ``distance`` around ``a``.

    A point ``a + s t e_j`` counts as in the closure when ``a + s (t - slack) e_j``
    is a member, and as on the boundary when additionally
    ``a + s (t + slack) e_j`` is not.  Axes of zero weight are skipped since
    no finite step reaches the given cost along them.
    """
    a = as_point(a)
    n = a.shape[0]
    w = spec.weights_for(n)
    inside = membership_of(body)
    points, closure, boundary = [], [], []
    for j, s in axis_order(n):
        step = spec.axis_step(w[j], distance)
        if math.isinf(step):
            continue
        e = np.zeros(n)
        e[j] = s
        points.append((a + step * e).tolist())
        near = inside(a + max(step - slack, 0.0) * e)
        closure.append(bool(near))
        boundary.append(bool(near and not inside(a + (step + slack) * e)))
    report = ESetReport(distance, points, closure, boundary,
                        all(closure) and any(boundary))
    if not all(closure):
        k = closure.index(False)
        report.message = f"axis point {points[k]} lies outside the set"
    elif not any(boundary):
        report.message = "no axis point lies on the boundary"
    if raise_on_failure and not report.passed:
        bad = points[closure.index(False)] if not all(closure) else None
        raise ProofInvariantViolation(report.message, bad)
    return report


def ray_exits(body: Body, a: np.ndarray, directions: np.ndarray) -> np.ndarray:
    """Boundary parameter ``t`` along each row of ``directions`` from ``a``."""
    if isinstance(body, HPolyhedron):
        slack = body.b - body.A @ a
        rates = directions @ body.A.T
        with np.errstate(divide="ignore"):
            ratios = np.where(rates > 0, slack / np.where(rates > 0, rates, 1.0), np.inf)
        return ratios.min(axis=1)
    if isinstance(body, VPolytope):
        T = vrep_translate(body, a)
        return np.array([ray_lambda(T, u) for u in directions])
    return np.array([ray_boundary_bisect(body, a, u) for u in directions])


def axis_norm_distance(result: ProjectionResult, exponent: float,
                       weights: np.ndarray) -> float:
    """Best single-axis distance under ``(sum w |x|^q)^(1/q)``."""
    return min(weights[e.axis] ** (1.0 / exponent) * e.lam
               for e in result.lambda_table if not math.isinf(e.lam))


@dataclass
class RaySamplingReport:
    reported: float
    sampled_min: float
    direction: List[float]
    samples: int
    seed: int
    exponent: float
    passed: bool

    def to_dict(self):
        return asdict(self)


def ray_sampling_check(result: ProjectionResult, body: Body, spec: NormSpec = L1,
                       samples: int = 10_000, seed: int = 0,
                       exponent: Optional[float] = None,
                       extra_directions: Sequence[Sequence[float]] = (),
                       tol: float = RAY_TOL,
                       raise_on_failure: bool = True) -> RaySamplingReport:
    """No sampled ray may reach the boundary cheaper than ``result.distance``.

    By default distances use ``spec``.  Passing ``exponent`` (any ``q > 0``,
    including ``q > 1``) switches both sides to ``(sum w |x|^q)^(1/q)``, the
    reported side being the best axis from ``result.lambda_table``.
    """
    a = result.query_point
    n = a.shape[0]
    w = spec.weights_for(n)
    rng = np.random.default_rng(seed)
    U = rng.standard_normal((samples, n))
    if len(extra_directions):
        U = np.vstack([U, np.asarray(extra_directions, dtype=float)])
    U /= np.linalg.norm(U, axis=1)[:, None]
    t = ray_exits(body, a, U)
    steps = np.abs(U * t[:, None])
    if exponent is None:
        q = spec.p
        reported = result.distance
        dists = (w * steps ** q).sum(axis=1)
    else:
        q = float(exponent)
        reported = axis_norm_distance(result, q, w)
        dists = (w * steps ** q).sum(axis=1) ** (1.0 / q)
    k = int(np.argmin(dists))
    report = RaySamplingReport(float(reported), float(dists[k]), U[k].tolist(),
                               samples, seed, q, bool(dists[k] >= reported - tol))
    if raise_on_failure and not report.passed:
        raise GlobalityViolation(
            f"direction {U[k].tolist()} reaches the boundary at {dists[k]:.9g} "
            f"< reported {reported:.9g}", U[k])
    return report


@dataclass
class CheckOutcome:
    name: str
    passed: bool
    details: dict


@dataclass
class VerificationReport:
    checks: List[CheckOutcome]
    seed: int
    samples: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {"passed": self.passed, "seed": self.seed, "samples": self.samples,
                "checks": [asdict(c) for c in self.checks]}


def verify_projection(body: Body, result: ProjectionResult, spec: NormSpec = L1,
                      samples: int = 10_000, seed: int = 0, inflate: float = 1.0,
                      exponent: Optional[float] = None) -> VerificationReport:
    """Run every applicable check and collect the outcomes.

    ``inflate`` scales the distance fed to the E-set check (falsification
    control).  ``exponent`` runs the ray check under a different norm.
    """
    a = result.query_point
    checks = []
    if isinstance(body, HPolyhedron) and spec.p == 1.0:
        fo = facet_l1_oracle(body, a, spec)
        ok = bool(abs(fo.distance - result.distance) <= 1e-7 * max(1.0, fo.distance))
        checks.append(CheckOutcome("facet_l1_oracle", ok, {
            "oracle_distance": float(fo.distance),
            "projector_distance": float(result.distance),
            "facet": fo.facet, "skipped_facets": fo.skipped}))
    es = theorem1_E_set_check(body, a, result.distance * inflate, spec,
                              raise_on_failure=False)
    checks.append(CheckOutcome("theorem1_E_set_check", es.passed, es.to_dict()))
    rs = ray_sampling_check(result, body, spec, samples, seed, exponent,
                            raise_on_failure=False)
    checks.append(CheckOutcome("ray_sampling_check", rs.passed, rs.to_dict()))
    return VerificationReport(checks, seed, samples)
