"""Axis projection for convex bodies known only through a membership test."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import (L1, AxisLambda, HPolyhedron, NormSpec, ProjectionResult,
                   VPolytope, as_point, axis_order, build_result)
from .errors import (DimensionError, DomainError, LpFailure, NotInteriorError,
                     NumericalBreakdown, RadiusHintViolation)
from .lp import LpProblem, solve

BISECT_TOL = 1e-9


@dataclass(frozen=True)
class ConvexBody:
    """A closed convex body in ``R^n``.

    ``membership(x)`` returns True for points inside or on the boundary.
    ``radius_hint`` bounds the body inside the max-norm ball of that radius
    around any query point used with it.
    """

    dimension: int
    membership: Callable[[np.ndarray], bool]
    radius_hint: float
    name: str = "body"

    def __post_init__(self):
        if self.dimension < 1:
            raise DimensionError("dimension must be at least 1")
        if not (self.radius_hint > 0 and math.isfinite(self.radius_hint)):
            raise DomainError("radius_hint must be positive and finite")

    def __contains__(self, x):
        return bool(self.membership(np.asarray(x, dtype=float)))


def ball(center, radius: float, radius_hint: Optional[float] = None) -> ConvexBody:
    c = as_point(center, "center")
    r2 = float(radius) ** 2
    return ConvexBody(c.shape[0], lambda x: float(np.sum((x - c) ** 2)) <= r2,
                      radius_hint or 2.0 * radius, "ball")


def ellipsoid(center, semi_axes, radius_hint: Optional[float] = None) -> ConvexBody:
    """Axis-aligned ellipsoid ``sum ((x_i - c_i) / s_i)^2 <= 1``."""
    c = as_point(center, "center")
    s = as_point(semi_axes, "semi_axes")
    if s.shape != c.shape:
        raise DimensionError("center and semi_axes differ in length")
    if np.any(s <= 0):
        raise DomainError("semi-axes must be positive")
    return ConvexBody(c.shape[0], lambda x: float(np.sum(((x - c) / s) ** 2)) <= 1.0,
                      radius_hint or 2.0 * float(s.max()), "ellipsoid")


def hrep_body(P: HPolyhedron, radius_hint: float) -> ConvexBody:
    return ConvexBody(P.dim, P.contains, radius_hint, "hrep")


def hrep_ball(P: HPolyhedron, center, radius: float,
              radius_hint: Optional[float] = None) -> ConvexBody:
    """Intersection of a polyhedron with a Euclidean ball."""
    B = ball(center, radius)
    if B.dimension != P.dim:
        raise DimensionError("ball and polyhedron differ in dimension")
    return ConvexBody(P.dim, lambda x: P.contains(x) and B.membership(x),
                      radius_hint or 2.0 * radius, "hrep_ball")


def vrep_contains(V: VPolytope, x, tol: Optional[float] = None) -> bool:
    """Is ``x`` a convex combination of the vertices? (phase-1 feasibility LP)"""
    x = np.asarray(x, dtype=float)
    m = V.n_vertices
    A_eq = np.vstack([V.vertices.T, np.ones((1, m))])
    b_eq = np.concatenate([x, [1.0]])
    try:
        sol = solve(LpProblem(np.zeros(m), A_eq, b_eq))
    except NumericalBreakdown as exc:
        raise LpFailure(str(exc)) from exc
    return sol.optimal


def vrep_body(V: VPolytope, radius_hint: Optional[float] = None) -> ConvexBody:
    if radius_hint is None:
        span = V.vertices.max(axis=0) - V.vertices.min(axis=0)
        radius_hint = 2.0 * float(span.max()) + 1.0
    return ConvexBody(V.dim, lambda x: vrep_contains(V, x), radius_hint, "vrep")


def ray_boundary_bisect(B: ConvexBody, a, direction, tol: float = BISECT_TOL) -> float:
    """Distance parameter ``t`` where ``a + t * direction`` leaves ``B``.

    Doubling from ``min(1, cap / 2)`` brackets the exit, bisection narrows the
    bracket to ``tol``; the midpoint of the final bracket is returned.
    """
    a = np.asarray(a, dtype=float)
    u = np.asarray(direction, dtype=float)
    cap = B.radius_hint / float(np.max(np.abs(u)))
    inside = B.membership
    if not inside(a):
        raise NotInteriorError()
    if inside(a + cap * u):
        raise RadiusHintViolation(
            f"point at radius_hint {B.radius_hint} along {u.tolist()} is still inside")
    lo, t = 0.0, min(1.0, cap / 2.0)
    while t < cap and inside(a + t * u):
        lo, t = t, min(2.0 * t, cap)
    hi = t
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if inside(a + mid * u):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def axis_boundary_bisect(B: ConvexBody, a, axis: int, sign: int,
                         tol: float = BISECT_TOL) -> float:
    """Step along ``sign * e_axis`` (0-based axis) from ``a`` to the boundary of ``B``."""
    a = as_point(a)
    if a.shape[0] != B.dimension:
        raise DimensionError(f"point has dimension {a.shape[0]}, body {B.dimension}")
    u = np.zeros(B.dimension)
    u[axis] = float(sign)
    return ray_boundary_bisect(B, a, u, tol)


def oracle_project(B: ConvexBody, a, spec: NormSpec = L1,
                   tol: float = BISECT_TOL) -> ProjectionResult:
    a = as_point(a)
    spec.weights_for(B.dimension)
    table = [AxisLambda(j, s, axis_boundary_bisect(B, a, j, s, tol))
             for j, s in axis_order(B.dimension)]
    # bisection noise is up to tol/2 per step; treat costs that close as tied
    return build_result(a, table, spec, tie_rtol=2.0 * tol)


def lp_ratio_bound(n: int, p: float) -> float:
    """``max { sum |x_i| : sum |x_i|^p = 1 }`` in ``R^n``.

    Equal to 1 for ``p <= 1`` and ``n ** (1 - 1/p)`` otherwise (attained at
    the uniform vector).
    """
    if n < 1:
        raise DimensionError("n must be at least 1")
    if not p > 0:
        raise DomainError(f"exponent must be positive, got {p}")
    if p <= 1:
        return 1.0
    return float(n) ** (1.0 - 1.0 / p)


def sample_ratio_bound(n: int, p: float, samples: int = 100_000,
                       seed: int = 0) -> float:
    """Monte-Carlo estimate of :func:`lp_ratio_bound` from random directions."""
    if not p > 0:
        raise DomainError(f"exponent must be positive, got {p}")
    rng = np.random.default_rng(seed)
    X = np.abs(rng.standard_normal((samples, n)))
    X /= (np.sum(X ** p, axis=1) ** (1.0 / p))[:, None]
    return float(X.sum(axis=1).max())


def check_ratio_bound(n: int, p: float, samples: int = 100_000, seed: int = 0):
    """Return ``(bound, sampled_max, ok)``.

    ``ok`` requires the sample not to exceed the bound (beyond 1e-6) and, for
    ``p > 1``, to come within 5% of it.
    """
    bound = lp_ratio_bound(n, p)
    sampled = sample_ratio_bound(n, p, samples, seed)
    ok = sampled <= bound + 1e-6
    if p > 1:
        ok = ok and sampled >= 0.95 * bound
    return bound, sampled, ok
