import math

import mpmath
import numpy as np
import pytest

from l1boundary.core import HPolyhedron, NormSpec, VPolytope, norm_distance, validate_hrep
from l1boundary.errors import DimensionError, DomainError, InvalidInputError, ZeroRowError


def test_norm_distance_l1():
    assert norm_distance([1, 1], [0, 0]) == 2.0


def test_norm_distance_identity():
    a = [0.3, -7.0, 2.5]
    assert norm_distance(a, a, NormSpec(0.5, [1, 2, 3])) == 0.0


def test_norm_distance_fractional_weighted():
    mpmath.mp.dps = 30
    expected = float(mpmath.sqrt(2) + 4 * mpmath.sqrt(3))
    assert expected == pytest.approx(8.342416792648604, abs=1e-15)
    got = norm_distance([2, -3], [0, 0], NormSpec(0.5, [1, 4]))
    assert got == pytest.approx(expected, rel=1e-14)


def test_norm_distance_dimension_mismatch():
    with pytest.raises(DimensionError):
        norm_distance([1, 2], [1, 2, 3])
    with pytest.raises(DimensionError):
        norm_distance([1, 2], [0, 0], NormSpec(1, [1, 1, 1]))


@pytest.mark.parametrize("p", [0.0, -1.0, 1.5, math.nan, math.inf])
def test_normspec_rejects_bad_exponent(p):
    with pytest.raises(DomainError):
        NormSpec(p)


def test_normspec_weights():
    with pytest.raises(InvalidInputError):
        NormSpec(1, [1, -1])
    with pytest.raises(InvalidInputError):
        NormSpec(1, [0, 0])
    # a zero weight is fine as long as another one is positive
    assert NormSpec(1, [0, 1]).weights_for(2).tolist() == [0, 1]


def test_validate_hrep_accepts():
    P = HPolyhedron([[1, 0], [0, 1]], [1, 1])
    assert validate_hrep(P) is P


def test_zero_row_rejected():
    with pytest.raises(ZeroRowError) as exc:
        HPolyhedron([[0, 0]], [1])
    assert exc.value.row == 0


def test_tiny_row_rejected_at_tolerance():
    with pytest.raises(ZeroRowError) as exc:
        HPolyhedron([[1e-15, 1e-15]], [1])
    assert exc.value.row == 0
    # just above the tolerance is kept
    HPolyhedron([[2e-12, 0.0]], [1])


def test_zero_row_reports_first_offender():
    with pytest.raises(ZeroRowError) as exc:
        HPolyhedron([[1, 0], [0, 0], [0, 0]], [1, 1, 1])
    assert exc.value.row == 1


def test_b_length_mismatch():
    with pytest.raises(DimensionError):
        HPolyhedron([[1, 0], [0, 1]], [1, 1, 1])


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_nonfinite_inputs_rejected(bad):
    with pytest.raises(InvalidInputError):
        HPolyhedron([[1, bad]], [1])
    with pytest.raises(InvalidInputError):
        HPolyhedron([[1, 0]], [bad])
    with pytest.raises(InvalidInputError):
        VPolytope([[0, bad]])


def test_types_are_immutable():
    P = HPolyhedron([[1, 0]], [1])
    with pytest.raises(ValueError):
        P.A[0, 0] = 5.0
    V = VPolytope([[1.0], [-1.0]])
    assert V.dim == 1 and V.n_vertices == 2
