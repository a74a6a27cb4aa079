import math

import numpy as np
import pytest

from l1boundary import fixtures as F
from l1boundary.core import NormSpec
from l1boundary.errors import DomainError, NotInteriorError, RadiusHintViolation
from l1boundary.hrep import hrep_project
from l1boundary.oracle import (BISECT_TOL, axis_boundary_bisect, ball, check_ratio_bound,
                               ellipsoid, hrep_ball, hrep_body, lp_ratio_bound,
                               oracle_project)

DISK = ball([0, 0], 1.0)
ELLIPSE = ellipsoid([0, 0], [2, 1])


@pytest.mark.parametrize("axis,sign", [(0, 1), (0, -1), (1, 1), (1, -1)])
def test_disk_axes(axis, sign):
    assert axis_boundary_bisect(DISK, [0, 0], axis, sign) == pytest.approx(1.0, abs=1e-9)


def test_ellipse_axes():
    assert axis_boundary_bisect(ELLIPSE, [0, 0], 0, 1) == pytest.approx(2.0, abs=1e-9)
    assert axis_boundary_bisect(ELLIPSE, [0, 0], 1, -1) == pytest.approx(1.0, abs=1e-9)


def test_offset_disk_axis():
    assert axis_boundary_bisect(DISK, [0.5, 0], 0, 1) == pytest.approx(0.5, abs=1e-9)


def test_bisect_errors():
    with pytest.raises(NotInteriorError):
        axis_boundary_bisect(DISK, [2, 0], 0, 1)
    with pytest.raises(RadiusHintViolation):
        axis_boundary_bisect(ball([0, 0], 5.0, radius_hint=1.0), [0, 0], 0, 1)


def test_project_disk():
    r = oracle_project(DISK, [0, 0])
    assert r.distance == pytest.approx(1.0, abs=1e-9)
    assert (r.axis, r.sign) == (0, 1)


def test_project_ellipse():
    r = oracle_project(ELLIPSE, [0, 0])
    assert r.distance == pytest.approx(1.0, abs=1e-9)
    assert r.axis == 1


def test_project_offset_disk():
    r = oracle_project(DISK, [0.5, 0])
    lams = [e.lam for e in r.lambda_table]
    expected = [0.5, 1.5, math.sqrt(0.75), math.sqrt(0.75)]
    assert lams == pytest.approx(expected, abs=1e-9)
    assert r.distance == pytest.approx(0.5, abs=1e-9)
    assert (r.axis, r.sign) == (0, 1)


@pytest.mark.parametrize("a", [(0, 0), (0.3, -0.2), (-0.3, 0.4)])
def test_agrees_with_hrep(a):
    P = F.triangle_h()
    r_h = hrep_project(P, a)
    r_o = oracle_project(hrep_body(P, radius_hint=10), a)
    assert abs(r_h.distance - r_o.distance) <= 2 * BISECT_TOL


def test_hrep_ball_intersection():
    B = hrep_ball(F.halfplane_h(), [0, 0], 3.0)
    r = oracle_project(B, [0, 0])
    assert r.distance == pytest.approx(2.0, abs=1e-9)


def test_weighted_fractional():
    r = oracle_project(ELLIPSE, [0, 0], NormSpec(0.5, [1, 4]))
    # axis 1: sqrt(2) ~ 1.414 beats axis 2: 4 * 1
    assert r.axis == 0 and r.distance == pytest.approx(math.sqrt(2), abs=1e-9)


@pytest.mark.parametrize("n,p,expected", [(4, 2, 2.0), (7, 1, 1.0), (2, 0.5, 1.0),
                                          (9, 3, 4.326748710922225), (1, 5, 1.0)])
def test_lp_ratio_bound(n, p, expected):
    assert lp_ratio_bound(n, p) == pytest.approx(expected, rel=1e-14)


def test_lp_ratio_bound_domain():
    with pytest.raises(DomainError):
        lp_ratio_bound(3, 0)
    with pytest.raises(DomainError):
        lp_ratio_bound(3, -1)


@pytest.mark.parametrize("n,p", [(4, 2), (3, 0.5), (5, 1)])
def test_ratio_sampler_brackets(n, p):
    bound, sampled, ok = check_ratio_bound(n, p, samples=20_000, seed=1)
    assert ok and sampled <= bound + 1e-6


def test_witness_body_breaks_axis_rule_for_p2():
    body = hrep_body(F.witness_h(), radius_hint=30)
    r = oracle_project(body, [0, 0])
    assert r.distance == pytest.approx(1.0, abs=1e-9)
    u = np.array([1.0, 1.0]) / math.sqrt(2)
    from l1boundary.oracle import ray_boundary_bisect
    t = ray_boundary_bisect(body, [0, 0], u)
    assert t == pytest.approx(1 / math.sqrt(2), abs=1e-9)
    assert t < r.distance
