"""Closed-form projection for polyhedra given as ``{x : A x <= b}``.

After moving the query point to the origin, the largest step along
``+e_j`` is ``min b_i / a_ij`` over rows with ``a_ij > 0`` (and along
``-e_j`` the same ratio over rows with ``a_ij < 0``).  The minimum over all
such steps, with unit weights and ``p = 1``, collapses to
``min_i b_i / max_j |a_ij|``.
"""
from __future__ import annotations

import math
from typing import List

import numpy as np

from .core import (L1, ZERO_TOL, AxisLambda, HPolyhedron, NormSpec,
                   ProjectionResult, as_point, build_result)
from .errors import DimensionError, NotInteriorError


def _check_dims(P: HPolyhedron, a: np.ndarray):
    if a.shape[0] != P.dim:
        raise DimensionError(f"point has dimension {a.shape[0]}, polyhedron {P.dim}")


def hrep_translate(P: HPolyhedron, a) -> HPolyhedron:
    """Shift ``P`` so that ``a`` becomes the origin: ``(A, b - A a)``."""
    a = as_point(a)
    _check_dims(P, a)
    return HPolyhedron(P.A, P.b - P.A @ a)


def hrep_is_interior(P: HPolyhedron, a, tol: float = ZERO_TOL) -> bool:
    a = as_point(a)
    _check_dims(P, a)
    return bool(np.all(P.b - P.A @ a > tol))


def hrep_axis_lambdas(P: HPolyhedron, tol: float = ZERO_TOL) -> List[AxisLambda]:
    """Axis steps from the origin, ordered (1,+), (1,-), (2,+), ...

    Requires ``b > tol`` componentwise.  Directions with no blocking row get
    ``inf`` and no binding row.
    """
    A, b = P.A, P.b
    if not np.all(b > tol):
        raise NotInteriorError()
    table = []
    for j in range(P.dim):
        col = A[:, j]
        for sign, rows in ((1, np.flatnonzero(col > tol)),
                           (-1, np.flatnonzero(col < -tol))):
            if rows.size == 0:
                table.append(AxisLambda(j, sign, math.inf, None))
                continue
            # -b/a for a < 0 is the same IEEE value as b/|a|
            ratios = b[rows] / np.abs(col[rows])
            k = int(np.argmin(ratios))
            table.append(AxisLambda(j, sign, float(ratios[k]), int(rows[k])))
    return table


def minmax_distance(P: HPolyhedron) -> float:
    """``min_i b_i / max_j |a_ij|`` for an origin-interior polyhedron."""
    return float(np.min(P.b / np.max(np.abs(P.A), axis=1)))


def hrep_project(P: HPolyhedron, a, spec: NormSpec = L1,
                 check_minmax: bool = False) -> ProjectionResult:
    """Minimum-distance boundary point of ``P`` as seen from interior ``a``.

    With ``check_minmax`` the unit-weight ``p = 1`` answer is reconciled
    against :func:`minmax_distance`.
    """
    a = as_point(a)
    _check_dims(P, a)
    spec.weights_for(P.dim)
    shifted = P.b - P.A @ a
    if not np.all(shifted > ZERO_TOL):
        raise NotInteriorError()
    Q = HPolyhedron(P.A, shifted)
    table = hrep_axis_lambdas(Q)
    result = build_result(a, table, spec)
    if check_minmax and spec.p == 1.0 and spec.weights is None:
        mm = minmax_distance(Q)
        if not abs(mm - result.distance) <= 1e-12 * max(1.0, mm):
            raise AssertionError(
                f"minmax identity broken: {mm!r} vs {result.distance!r}")
    return result
