"""Shared domain types, norm evaluation and input validation."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import (DimensionError, DomainError, InvalidInputError,
                     UnboundedBoundaryError, ZeroRowError)

# Entry magnitudes at or below this count as zero (zero rows, coefficient
# signs, strict interiority of slacks).
ZERO_TOL = 1e-12


def as_point(x, name: str = "point") -> np.ndarray:
    """Return ``x`` as a finite 1-D float array, or raise."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise DimensionError(f"{name} must be a non-empty 1-D vector")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contains NaN or infinite entries")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


def _as_matrix(A, name: str) -> np.ndarray:
    arr = np.asarray(A, dtype=float)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionError(f"{name} must be a non-empty 2-D matrix")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} contains NaN or infinite entries")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class HPolyhedron:
    """Polyhedron ``{x : A x <= b}``.

    Construction validates shapes and finiteness and rejects all-zero rows;
    rows are never dropped silently.
    """

    A: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        A = _as_matrix(self.A, "A")
        b = np.asarray(self.b, dtype=float)
        if b.ndim != 1 or b.shape[0] != A.shape[0]:
            raise DimensionError(
                f"b has shape {b.shape}, expected ({A.shape[0]},) to match A")
        b = as_point(b, "b")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        validate_hrep(self)

    @property
    def dim(self) -> int:
        return self.A.shape[1]

    @property
    def n_constraints(self) -> int:
        return self.A.shape[0]

    def contains(self, x, slack: float = 0.0) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(self.A @ x <= self.b + slack))

    def __repr__(self):
        return f"HPolyhedron(m={self.n_constraints}, n={self.dim})"


def validate_hrep(P: HPolyhedron, zero_tol: float = ZERO_TOL) -> HPolyhedron:
    """Check the no-zero-row rule; returns ``P`` unchanged when it holds."""
    A = np.asarray(P.A, dtype=float)
    b = np.asarray(P.b, dtype=float)
    if A.ndim != 2 or b.ndim != 1 or b.shape[0] != A.shape[0]:
        raise DimensionError("|b| must equal the number of rows of A")
    row_max = np.max(np.abs(A), axis=1)
    bad = np.flatnonzero(row_max <= zero_tol)
    if bad.size:
        raise ZeroRowError(int(bad[0]))
    return P


@dataclass(frozen=True, eq=False)
class VPolytope:
    """Polytope given by a finite point list.

    The modelled set is ``{sum_k mu_k v_k : sum_k mu_k <= 1, mu >= 0}``, i.e.
    the hull of the vertices together with the origin of the (translated)
    frame.  When the query point is interior this is just the hull of the
    vertices.
    """

    vertices: np.ndarray

    def __post_init__(self):
        V = np.asarray(self.vertices, dtype=float)
        if V.ndim == 1:
            V = V.reshape(-1, 1) if V.size else V
        object.__setattr__(self, "vertices", _as_matrix(V, "vertices"))

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    def __repr__(self):
        return f"VPolytope(m={self.n_vertices}, n={self.dim})"


@dataclass(frozen=True, eq=False)
class NormSpec:
    """Weighted quasi-distance ``sum_i w_i |x_i|^p`` with ``0 < p <= 1``."""

    p: float = 1.0
    weights: Optional[np.ndarray] = None

    def __post_init__(self):
        p = float(self.p)
        if not math.isfinite(p) or p <= 0.0 or p > 1.0:
            raise DomainError(f"exponent p must lie in (0, 1], got {self.p}")
        object.__setattr__(self, "p", p)
        if self.weights is not None:
            w = as_point(self.weights, "weights")
            if np.any(w < 0):
                raise InvalidInputError("weights must be nonnegative")
            if not np.any(w > 0):
                raise InvalidInputError("at least one weight must be positive")
            object.__setattr__(self, "weights", w)

    def weights_for(self, n: int) -> np.ndarray:
        if self.weights is None:
            return np.ones(n)
        if self.weights.shape[0] != n:
            raise DimensionError(
                f"weights have length {self.weights.shape[0]}, expected {n}")
        return self.weights

    def axis_cost(self, weight: float, step: float) -> float:
        """Cost of moving ``step`` along one axis of the given weight.

        An infinite step stays infinite even for a zero weight.
        """
        if math.isinf(step):
            return math.inf
        return float(weight * abs(step) ** self.p)

    def axis_step(self, weight: float, cost: float) -> float:
        """Inverse of :meth:`axis_cost`: step length that costs ``cost``."""
        if weight == 0.0:
            return math.inf
        return (cost / weight) ** (1.0 / self.p)


L1 = NormSpec()


def norm_distance(x, a, spec: NormSpec = L1) -> float:
    """Weighted quasi-distance ``sum_i w_i |x_i - a_i|^p``."""
    x = np.asarray(x, dtype=float)
    a = np.asarray(a, dtype=float)
    if x.shape != a.shape or x.ndim != 1:
        raise DimensionError(f"shape mismatch: {x.shape} vs {a.shape}")
    w = spec.weights_for(x.shape[0])
    return float(np.sum(w * np.abs(x - a) ** spec.p))


@dataclass(frozen=True)
class AxisLambda:
    """Largest step along ``sign * e_axis`` that stays in the set.

    ``axis`` is 0-based.  ``binding_row`` is the constraint attaining the
    step for H-polyhedra and ``None`` otherwise or when the step is infinite.
    """

    axis: int
    sign: int
    lam: float
    binding_row: Optional[int] = None


@dataclass(frozen=True, eq=False)
class ProjectionResult:
    """Minimum-distance boundary point found by a single-axis move.

    ``axis`` is 0-based here; the CLI reports it 1-based.
    """

    distance: float
    axis: int
    sign: int
    boundary_point: np.ndarray
    lambda_table: Tuple[AxisLambda, ...]
    query_point: np.ndarray = field(default=None)


def axis_order(n: int):
    """Canonical (axis, sign) order used for tables and tie-breaking."""
    for j in range(n):
        yield j, 1
        yield j, -1


def select_minimum(table: Sequence[AxisLambda], spec: NormSpec, n: int,
                   tie_rtol: float = 0.0) -> Tuple[int, float]:
    """Index of the table entry with least weighted cost.

    Ties go to the earliest entry (lowest axis, then + before -).  With a
    positive ``tie_rtol`` costs within that relative margin of the minimum
    count as tied, which absorbs solver noise between symmetric directions.
    """
    w = spec.weights_for(n)
    costs = [spec.axis_cost(w[e.axis], e.lam) for e in table]
    best = min(costs)
    if math.isinf(best):
        # impossible for a validated polyhedron: some row blocks some axis
        raise UnboundedBoundaryError("every axis step is infinite")
    margin = tie_rtol * max(1.0, abs(best))
    for k, c in enumerate(costs):
        if c <= best + margin:
            return k, c
    raise AssertionError("unreachable")


def build_result(a: np.ndarray, table: Sequence[AxisLambda], spec: NormSpec,
                 tie_rtol: float = 0.0) -> ProjectionResult:
    n = a.shape[0]
    k, cost = select_minimum(table, spec, n, tie_rtol)
    entry = table[k]
    x = np.array(a, dtype=float)
    x[entry.axis] += entry.sign * entry.lam
    x.setflags(write=False)
    return ProjectionResult(distance=cost, axis=entry.axis, sign=entry.sign,
                            boundary_point=x, lambda_table=tuple(table),
                            query_point=a)
