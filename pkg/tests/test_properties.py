import numpy as np
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from l1boundary import fixtures as F
from l1boundary.core import HPolyhedron, NormSpec, norm_distance
from l1boundary.hrep import hrep_project, hrep_translate, minmax_distance
from l1boundary.lp import LpProblem, residual, solve
from l1boundary.verify import facet_l1_oracle, theorem1_E_set_check

coords = st.floats(-1e3, 1e3, allow_nan=False)
exponents = st.floats(0.05, 1.0)


@st.composite
def point_pairs(draw, n=3):
    x = draw(arrays(float, n, elements=coords))
    a = draw(arrays(float, n, elements=coords))
    w = draw(arrays(float, n, elements=st.floats(0.01, 10)))
    return x, a, NormSpec(draw(exponents), w)


@given(point_pairs())
def test_norm_symmetric_nonnegative(args):
    x, a, spec = args
    d = norm_distance(x, a, spec)
    assert d >= 0 and d == norm_distance(a, x, spec)
    assert (d == 0) == bool(np.all(x == a))


@given(point_pairs(), st.integers(0, 2), st.floats(-1e3, 1e3))
def test_norm_axis_homogeneous(args, j, t):
    _, a, spec = args
    x = a.copy()
    x[j] += t
    expected = spec.weights[j] * abs(x[j] - a[j]) ** spec.p
    assert abs(norm_distance(x, a, spec) - expected) <= 1e-14 * max(1.0, expected)


@given(point_pairs(), arrays(float, 3, elements=st.integers(-1000, 1000)))
def test_norm_translation_invariant(args, c):
    # integer coordinates keep the shifted differences exact
    x, a, spec = args
    x, a = np.round(x), np.round(a)
    d0 = norm_distance(x, a, spec)
    d1 = norm_distance(x + c, a + c, spec)
    assert abs(d0 - d1) <= 1e-9 * max(1.0, d0)


@st.composite
def bounded_polyhedra(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    n = draw(st.integers(2, 5))
    m = draw(st.integers(n + 1, 12))
    return F.random_bounded_hrep(rng, n, m)


@settings(max_examples=60, deadline=None)
@given(bounded_polyhedra())
def test_minmax_identity(P):
    r = hrep_project(P, np.zeros(P.dim))
    assert r.distance == minmax_distance(P)


@settings(max_examples=40, deadline=None)
@given(bounded_polyhedra())
def test_matches_facet_oracle(P):
    a = np.zeros(P.dim)
    r = hrep_project(P, a)
    assert abs(r.distance - facet_l1_oracle(P, a).distance) <= 1e-7
    theorem1_E_set_check(P, a, r.distance)


@settings(max_examples=60, deadline=None)
@given(bounded_polyhedra(), st.floats(1e-3, 1e3))
def test_scaling_b(P, alpha):
    a = np.zeros(P.dim)
    d = hrep_project(P, a).distance
    ds = hrep_project(HPolyhedron(P.A, alpha * P.b), a).distance
    assert abs(ds / d - alpha) <= 1e-12 * alpha


@settings(max_examples=60, deadline=None)
@given(bounded_polyhedra(), st.floats(0.0, 0.9), st.data())
def test_translation_consistency(P, shrink, data):
    # a point strictly inside: shrink a random boundary axis point toward 0
    r0 = hrep_project(P, np.zeros(P.dim))
    a = shrink * r0.boundary_point
    spec = NormSpec(data.draw(exponents))
    r = hrep_project(P, a, spec)
    r_t = hrep_project(hrep_translate(P, a), np.zeros(P.dim), spec)
    assert r.distance == r_t.distance


@settings(max_examples=60, deadline=None)
@given(bounded_polyhedra())
def test_boundary_point_tight(P):
    r = hrep_project(P, np.zeros(P.dim))
    slack = P.b - P.A @ r.boundary_point
    assert slack.min() >= -1e-9 and slack.min() <= 1e-7


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_lp_residual_and_determinism(seed):
    rng = np.random.default_rng(seed)
    n, me, mu = int(rng.integers(1, 6)), int(rng.integers(0, 3)), int(rng.integers(1, 7))
    prob = LpProblem(rng.normal(size=n), rng.normal(size=(me, n)), rng.normal(size=me),
                     np.vstack([rng.normal(size=(mu, n)), np.eye(n), -np.eye(n)]),
                     np.concatenate([rng.normal(size=mu), np.full(2 * n, 3.0)]),
                     rng.random(n) < 0.5)
    sol = solve(prob)
    again = solve(prob)
    assert sol.status == again.status and sol.objective_value == again.objective_value
    if sol.optimal:
        assert residual(prob, sol.primal) <= 1e-8
