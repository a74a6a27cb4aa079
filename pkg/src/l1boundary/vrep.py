"""Projection for polytopes given by vertex lists, via one small LP per axis direction."""
from __future__ import annotations

from typing import List

import numpy as np

from .core import (L1, ZERO_TOL, AxisLambda, NormSpec, ProjectionResult,
                   VPolytope, as_point, axis_order, build_result)
from .errors import DimensionError, LpFailure, NotInteriorError, NumericalBreakdown
from .lp import LpProblem, solve

# LP-derived steps that agree to this relative margin count as tied.
TIE_RTOL = 1e-9


def vrep_translate(V: VPolytope, a) -> VPolytope:
    a = as_point(a)
    if a.shape[0] != V.dim:
        raise DimensionError(f"point has dimension {a.shape[0]}, polytope {V.dim}")
    return VPolytope(V.vertices - a)


def ray_lambda(V: VPolytope, direction) -> float:
    """Largest ``t`` with ``t * direction = sum_k mu_k v_k``, ``sum mu <= 1``, ``mu >= 0``.

    Variables are ``(t, mu_1..mu_m)`` with ``t`` free.  ``t = 0, mu = 0`` is
    always feasible, so the value is finite and nonnegative whenever the
    LP is bounded.
    """
    u = np.asarray(direction, dtype=float)
    m, n = V.n_vertices, V.dim
    A_eq = np.hstack([u.reshape(n, 1), -V.vertices.T])
    A_ub = np.hstack([[0.0], np.ones(m)]).reshape(1, -1)
    c = np.zeros(m + 1)
    c[0] = 1.0
    free = np.zeros(m + 1, dtype=bool)
    free[0] = True
    prob = LpProblem(c, A_eq, np.zeros(n), A_ub, [1.0], free)
    try:
        sol = solve(prob)
    except NumericalBreakdown as exc:
        raise LpFailure(str(exc)) from exc
    if not sol.optimal:
        raise LpFailure(f"axis LP ended {sol.status.value}")
    return max(0.0, sol.objective_value)


def vrep_axis_lambda(V: VPolytope, axis: int, sign: int) -> float:
    """Step from the origin along ``sign * e_axis`` to the boundary (0-based axis)."""
    u = np.zeros(V.dim)
    u[axis] = float(sign)
    return ray_lambda(V, u)


def vrep_axis_lambdas(V: VPolytope) -> List[AxisLambda]:
    return [AxisLambda(j, s, vrep_axis_lambda(V, j, s)) for j, s in axis_order(V.dim)]


def vrep_is_interior(V: VPolytope, a, tol: float = ZERO_TOL) -> bool:
    """All ``2n`` axis steps positive means a cross-polytope around ``a`` fits inside."""
    T = vrep_translate(V, a)
    return all(e.lam > tol for e in vrep_axis_lambdas(T))


def vrep_project(V: VPolytope, a, spec: NormSpec = L1) -> ProjectionResult:
    a = as_point(a)
    T = vrep_translate(V, a)
    spec.weights_for(V.dim)
    table = vrep_axis_lambdas(T)
    if not all(e.lam > ZERO_TOL for e in table):
        raise NotInteriorError()
    return build_result(a, table, spec, tie_rtol=TIE_RTOL)
