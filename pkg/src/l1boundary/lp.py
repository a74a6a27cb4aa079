"""Dense two-phase simplex with Bland's rule.

Problems are stated as::

    maximize    c . z
    subject to  A_eq z  = b_eq
                A_ub z <= b_ub
                z_k >= 0      unless k is flagged free

Free variables are split into positive and negative parts, ``<=`` rows get
slack columns, and rows that cannot start on a slack get an artificial
column for Phase 1.  The LPs this package needs are tiny, so everything is
kept dense.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionError, NumericalBreakdown

FEAS_TOL = 1e-8
PIVOT_TOL = 1e-10
OPT_TOL = 1e-9


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True, eq=False)
class LpProblem:
    c: np.ndarray
    A_eq: Optional[np.ndarray] = None
    b_eq: Optional[np.ndarray] = None
    A_ub: Optional[np.ndarray] = None
    b_ub: Optional[np.ndarray] = None
    free: Optional[np.ndarray] = None

    def __post_init__(self):
        c = np.asarray(self.c, dtype=float).reshape(-1)
        N = c.shape[0]
        object.__setattr__(self, "c", c)
        for A_name, b_name in (("A_eq", "b_eq"), ("A_ub", "b_ub")):
            A, b = getattr(self, A_name), getattr(self, b_name)
            if A is None:
                A, b = np.zeros((0, N)), np.zeros(0)
            A = np.atleast_2d(np.asarray(A, dtype=float))
            b = np.asarray(b, dtype=float).reshape(-1)
            if A.shape[1] != N or A.shape[0] != b.shape[0]:
                raise DimensionError(
                    f"{A_name} {A.shape} / {b_name} {b.shape} inconsistent "
                    f"with {N} variables")
            object.__setattr__(self, A_name, A)
            object.__setattr__(self, b_name, b)
        free = np.zeros(N, dtype=bool) if self.free is None else \
            np.asarray(self.free, dtype=bool).reshape(-1)
        if free.shape[0] != N:
            raise DimensionError("free flags must match the number of variables")
        object.__setattr__(self, "free", free)

    @property
    def n_vars(self) -> int:
        return self.c.shape[0]


@dataclass(frozen=True, eq=False)
class LpSolution:
    status: LpStatus
    objective_value: Optional[float] = None
    primal: Optional[np.ndarray] = None
    iterations: int = 0

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


class _Tableau:
    """Row ``-1`` holds reduced costs of a minimisation; column ``-1`` the rhs."""

    def __init__(self, T, basis, max_iter):
        self.T = T
        self.basis = basis
        self.iterations = 0
        self.max_iter = max_iter

    def pivot(self, r, col):
        T = self.T
        piv = T[r, col]
        T[r] /= piv
        colvals = T[:, col].copy()
        colvals[r] = 0.0
        T -= np.outer(colvals, T[r])
        T[:, col] = 0.0
        T[r, col] = 1.0
        self.basis[r] = col
        self.iterations += 1
        if self.iterations > self.max_iter:
            raise NumericalBreakdown("simplex iteration limit exceeded")

    def run(self, allowed):
        """Minimise the cost row over columns in ``allowed``.

        Returns False when the problem is unbounded along an entering column.
        """
        T = self.T
        while True:
            reduced = T[-1, :-1]
            cand = np.flatnonzero((reduced < -OPT_TOL) & allowed)
            if cand.size == 0:
                return True
            col = cand[0]  # Bland: lowest index entering
            column = T[:-1, col]
            rows = np.flatnonzero(column > PIVOT_TOL)
            if rows.size == 0:
                if np.any(column > 0.0):
                    raise NumericalBreakdown(
                        f"only sub-tolerance pivots available in column {col}")
                return False
            ratios = T[rows, -1] / column[rows]
            best = ratios.min()
            tied = rows[ratios <= best + 1e-12 * max(1.0, abs(best))]
            # Bland: among tied rows, leave the lowest-index basic variable
            r = tied[np.argmin(self.basis[tied])]
            self.pivot(r, col)
            if not np.isfinite(T[-1, -1]):
                raise NumericalBreakdown("non-finite value in tableau")


def solve(prob: LpProblem, max_iter: int = 10_000) -> LpSolution:
    """Solve ``prob``; never raises for infeasible or unbounded problems."""
    c, free = prob.c, prob.free
    N = prob.n_vars
    # Column map from original variables to nonnegative split columns.
    neg_cols = np.flatnonzero(free)
    n_split = N + neg_cols.size

    def split(A):
        return np.hstack([A, -A[:, neg_cols]])

    A_eq, b_eq = split(prob.A_eq), prob.b_eq.copy()
    A_ub, b_ub = split(prob.A_ub), prob.b_ub.copy()
    m_eq, m_ub = A_eq.shape[0], A_ub.shape[0]
    m = m_eq + m_ub

    n_cols = n_split + m_ub
    rows = np.zeros((m, n_cols))
    rhs = np.zeros(m)
    rows[:m_eq, :n_split] = A_eq
    rhs[:m_eq] = b_eq
    rows[m_eq:, :n_split] = A_ub
    rows[m_eq:, n_split:] = np.eye(m_ub)
    rhs[m_eq:] = b_ub

    basis = np.full(m, -1)
    for i in range(m_ub):
        if b_ub[i] >= 0.0:
            basis[m_eq + i] = n_split + i
    neg = rhs < 0.0
    rows[neg] *= -1.0
    rhs[neg] *= -1.0

    need_art = np.flatnonzero(basis < 0)
    n_art = need_art.size
    total = n_cols + n_art
    T = np.zeros((m + 1, total + 1))
    T[:m, :n_cols] = rows
    T[:m, -1] = rhs
    for k, i in enumerate(need_art):
        T[i, n_cols + k] = 1.0
        basis[i] = n_cols + k
    tab = _Tableau(T, basis, max_iter)

    # Phase 1: minimise the sum of artificials.
    if n_art:
        T[-1, :] = 0.0
        T[-1, n_cols:total] = 1.0
        for i in need_art:
            T[-1] -= T[i]
        tab.run(np.ones(total, dtype=bool))
        if -T[-1, -1] > FEAS_TOL * max(1.0, np.abs(rhs).max()):
            return LpSolution(LpStatus.INFEASIBLE, iterations=tab.iterations)
        # Drive remaining artificials out of the basis; drop redundant rows.
        keep = np.ones(m + 1, dtype=bool)
        for r in range(m):
            if tab.basis[r] >= n_cols:
                nz = np.flatnonzero(np.abs(T[r, :n_cols]) > PIVOT_TOL)
                if nz.size:
                    tab.pivot(r, nz[0])
                else:
                    keep[r] = False
        if not keep.all():
            tab.T = T = T[keep]
            tab.basis = tab.basis[keep[:-1]]

    # Phase 2: maximise c . z, i.e. minimise -c . z.
    cost = np.zeros(total)
    cost[:N] = -c
    cost[N:n_split] = c[neg_cols]
    T[-1, :] = 0.0
    T[-1, :total] = cost
    for r, bcol in enumerate(tab.basis):
        if cost[bcol] != 0.0:
            T[-1] -= cost[bcol] * T[r]
    allowed = np.zeros(total, dtype=bool)
    allowed[:n_cols] = True
    if not tab.run(allowed):
        return LpSolution(LpStatus.UNBOUNDED, iterations=tab.iterations)

    z = np.zeros(total)
    z[tab.basis] = T[:-1, -1]
    z = z[:n_split]
    primal = z[:N].copy()
    primal[neg_cols] -= z[N:]
    primal[(primal < 0.0) & (primal > -FEAS_TOL) & ~free] = 0.0
    return LpSolution(LpStatus.OPTIMAL, float(c @ primal), primal,
                      iterations=tab.iterations)


def residual(prob: LpProblem, z) -> float:
    """Max-norm violation of ``z`` against the problem's constraints."""
    z = np.asarray(z, dtype=float)
    parts = [0.0]
    if prob.A_eq.shape[0]:
        parts.append(np.abs(prob.A_eq @ z - prob.b_eq).max())
    if prob.A_ub.shape[0]:
        parts.append(max(0.0, (prob.A_ub @ z - prob.b_ub).max()))
    bounded = ~prob.free
    if bounded.any():
        parts.append(max(0.0, -z[bounded].min()))
    return float(max(parts))
