"""Minimum L1 / weighted Lp (p <= 1) distance from an interior point to the
boundary of a convex set, computed by single-axis moves."""

from .core import (AxisLambda, HPolyhedron, NormSpec, ProjectionResult,
                   VPolytope, norm_distance, validate_hrep)
from .errors import *  # noqa: F401,F403
from .hrep import (hrep_axis_lambdas, hrep_is_interior, hrep_project,
                   hrep_translate, minmax_distance)
from .lp import LpProblem, LpSolution, LpStatus, solve
from .oracle import (ConvexBody, axis_boundary_bisect, ball, ellipsoid,
                     hrep_ball, lp_ratio_bound, oracle_project)
from .verify import facet_l1_oracle, ray_sampling_check, theorem1_E_set_check
from .vrep import vrep_axis_lambda, vrep_is_interior, vrep_project, vrep_translate

__version__ = "0.1.0"
