"""Hand-built instances with known answers, and a seeded random generator.

Each named fixture exists in matched H- and V-representations so the two
projectors can be compared on the same set.
"""
from __future__ import annotations

import itertools

import numpy as np

from .core import HPolyhedron, VPolytope


def box_h(r: float = 1.0, n: int = 2) -> HPolyhedron:
    I = np.eye(n)
    A = np.empty((2 * n, n))
    A[0::2] = I
    A[1::2] = -I
    return HPolyhedron(A, np.full(2 * n, float(r)))


def box_v(r: float = 1.0, n: int = 2) -> VPolytope:
    return VPolytope(r * np.array(list(itertools.product((1.0, -1.0), repeat=n))))


def cross_h(r: float = 2.0, n: int = 2) -> HPolyhedron:
    A = np.array(list(itertools.product((1.0, -1.0), repeat=n)))
    return HPolyhedron(A, np.full(A.shape[0], float(r)))


def cross_v(r: float = 2.0, n: int = 2) -> VPolytope:
    I = np.eye(n)
    return VPolytope(r * np.vstack([I, -I]))


def triangle_h() -> HPolyhedron:
    # x + y <= 2, -3x + y <= 2, x - 3y <= 2
    return HPolyhedron([[1.0, 1.0], [-3.0, 1.0], [1.0, -3.0]], [2.0, 2.0, 2.0])


def triangle_v() -> VPolytope:
    return VPolytope([[2.0, 0.0], [0.0, 2.0], [-1.0, -1.0]])


def halfplane_h() -> HPolyhedron:
    return HPolyhedron([[1.0, 1.0]], [2.0])


def witness_h() -> HPolyhedron:
    """``{x + y <= 1}`` clipped to ``[-10, 10]^2``."""
    A = np.vstack([[1.0, 1.0], box_h(n=2).A])
    return HPolyhedron(A, [1.0, 10.0, 10.0, 10.0, 10.0])


FIXTURE_PAIRS = {
    "box": (box_h, box_v),
    "cross": (cross_h, cross_v),
    "triangle": (triangle_h, triangle_v),
}


def random_bounded_hrep(rng: np.random.Generator, n: int, m: int) -> HPolyhedron:
    """Random bounded polyhedron with the origin strictly inside.

    ``n`` random rows plus minus a positive combination of them make a
    positively spanning set, so ``{A x <= 0} = {0}`` and the polyhedron is
    bounded; the remaining ``m - n - 1`` rows are arbitrary.  Slacks ``b`` are
    drawn from ``[0.5, 2]``.
    """
    if m < n + 1:
        raise ValueError("need at least n + 1 rows for a bounded polyhedron")
    while True:
        base = rng.standard_normal((n, n))
        if abs(np.linalg.det(base)) > 1e-3:
            break
    closing = -(rng.uniform(0.2, 1.0, size=n) @ base)
    extra = rng.standard_normal((m - n - 1, n))
    A = np.vstack([base, closing, extra])[rng.permutation(m)]
    b = rng.uniform(0.5, 2.0, size=m)
    return HPolyhedron(A, b)


def random_instances(count: int = 200, seed: int = 20240601):
    """Yield ``(n, m, P)`` with ``n`` in 2..6 and ``m`` in n+1..20."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(2, 7))
        m = int(rng.integers(n + 1, 21))
        yield n, m, random_bounded_hrep(rng, n, m)
