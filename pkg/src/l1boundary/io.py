"""JSON problem files and result serialization.

Problem file::

    {"representation": "hrep" | "vrep" | "oracle",
     "A": [[...]], "b": [...],                       # hrep
     "vertices": [[...]],                            # vrep
     "oracle": {"shape": "ball" | "ellipsoid" | "hrep_ball", ...,
                "radius_hint": R},                   # oracle
     "point": [...],
     "norm": {"p": 1, "weights": [...]}}             # norm optional

Infinite values appear only in outputs, as the string ``"inf"``.
Axes are 1-based in every serialized structure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from . import oracle as oracle_mod
from .core import (AxisLambda, HPolyhedron, NormSpec, ProjectionResult,
                   VPolytope, as_point)
from .errors import InvalidInputError

REPRESENTATIONS = ("hrep", "vrep", "oracle")
SHAPES = ("ball", "ellipsoid", "hrep_ball")


class SchemaError(InvalidInputError):
    pass


def _floats(value, name):
    try:
        return np.asarray(value, dtype=float)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"{name}: expected numbers") from exc


def _number(value, name) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"{name}: expected a number")
    return float(value)


def _vector(value, name) -> List[float]:
    arr = _floats(value, name)
    if arr.ndim != 1:
        raise SchemaError(f"{name}: expected a list of numbers")
    return arr.tolist()


def _matrix(value, name) -> List[List[float]]:
    arr = _floats(value, name)
    if arr.ndim != 2:
        raise SchemaError(f"{name}: expected a list of equal-length rows")
    return arr.tolist()


@dataclass
class ProblemFile:
    representation: str
    point: List[float]
    A: Optional[List[List[float]]] = None
    b: Optional[List[float]] = None
    vertices: Optional[List[List[float]]] = None
    oracle: Optional[Dict[str, Any]] = None
    p: float = 1.0
    weights: Optional[List[float]] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ProblemFile":
        if not isinstance(data, dict):
            raise SchemaError("top level must be a JSON object")
        rep = data.get("representation")
        if rep not in REPRESENTATIONS:
            raise SchemaError(f"representation must be one of {REPRESENTATIONS}")
        if "point" not in data:
            raise SchemaError("missing field 'point'")
        prob = cls(rep, _vector(data["point"], "point"))
        if rep == "hrep":
            if "A" not in data or "b" not in data:
                raise SchemaError("hrep needs 'A' and 'b'")
            prob.A = _matrix(data["A"], "A")
            prob.b = _vector(data["b"], "b")
        elif rep == "vrep":
            if "vertices" not in data:
                raise SchemaError("vrep needs 'vertices'")
            prob.vertices = _matrix(data["vertices"], "vertices")
        else:
            prob.oracle = _oracle_params(data.get("oracle"))
        norm = data.get("norm") or {}
        if not isinstance(norm, dict):
            raise SchemaError("norm must be an object")
        prob.p = _number(norm.get("p", 1.0), "p")
        if norm.get("weights") is not None:
            prob.weights = _vector(norm["weights"], "weights")
        return prob

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"representation": self.representation}
        if self.representation == "hrep":
            out["A"], out["b"] = self.A, self.b
        elif self.representation == "vrep":
            out["vertices"] = self.vertices
        else:
            out["oracle"] = dict(self.oracle)
        out["point"] = self.point
        norm: Dict[str, Any] = {"p": self.p}
        if self.weights is not None:
            norm["weights"] = self.weights
        out["norm"] = norm
        return out

    def norm_spec(self) -> NormSpec:
        return NormSpec(self.p, self.weights)

    def body(self):
        """The set as an :class:`HPolyhedron`, :class:`VPolytope` or ConvexBody."""
        if self.representation == "hrep":
            return HPolyhedron(self.A, self.b)
        if self.representation == "vrep":
            return VPolytope(self.vertices)
        return build_oracle(self.oracle, len(self.point))


def _oracle_params(params) -> Dict[str, Any]:
    if not isinstance(params, dict):
        raise SchemaError("oracle representation needs an 'oracle' object")
    shape = params.get("shape")
    if shape not in SHAPES:
        raise SchemaError(f"oracle shape must be one of {SHAPES}")
    if "radius_hint" not in params:
        raise SchemaError("oracle needs 'radius_hint'")
    out = {"shape": shape, "radius_hint": _number(params["radius_hint"], "radius_hint")}
    for key in ("center", "semi_axes", "b"):
        if key in params:
            out[key] = _vector(params[key], key)
    if "A" in params:
        out["A"] = _matrix(params["A"], "A")
    if "radius" in params:
        out["radius"] = _number(params["radius"], "radius")
    required = {"ball": ("radius",), "ellipsoid": ("semi_axes",),
                "hrep_ball": ("A", "b", "radius")}[shape]
    missing = [k for k in required if k not in out]
    if missing:
        raise SchemaError(f"oracle shape {shape!r} needs {missing}")
    return out


def build_oracle(params: Dict[str, Any], n: int) -> oracle_mod.ConvexBody:
    center = params.get("center", [0.0] * n)
    hint = params["radius_hint"]
    shape = params["shape"]
    if shape == "ball":
        return oracle_mod.ball(center, params["radius"], hint)
    if shape == "ellipsoid":
        return oracle_mod.ellipsoid(center, params["semi_axes"], hint)
    P = HPolyhedron(params["A"], params["b"])
    return oracle_mod.hrep_ball(P, center, params["radius"], hint)


def encode_float(x: float):
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return float(x)


def decode_float(x) -> float:
    return float(x)  # float("inf") handles the string form


def sign_str(s: int) -> str:
    return "+" if s > 0 else "-"


def result_to_dict(r: ProjectionResult) -> Dict[str, Any]:
    return {
        "distance": encode_float(r.distance),
        "axis": r.axis + 1,
        "sign": sign_str(r.sign),
        "boundary_point": [float(v) for v in r.boundary_point],
        "lambda_table": [
            {"axis": e.axis + 1, "sign": sign_str(e.sign),
             "lambda": encode_float(e.lam),
             "binding_row": e.binding_row}
            for e in r.lambda_table],
    }


def result_from_dict(d: Dict[str, Any], query_point=None) -> ProjectionResult:
    table = tuple(
        AxisLambda(int(e["axis"]) - 1, 1 if e["sign"] == "+" else -1,
                   decode_float(e["lambda"]), e.get("binding_row"))
        for e in d["lambda_table"])
    return ProjectionResult(
        distance=decode_float(d["distance"]), axis=int(d["axis"]) - 1,
        sign=1 if d["sign"] == "+" else -1,
        boundary_point=np.asarray(d["boundary_point"], dtype=float),
        lambda_table=table,
        query_point=None if query_point is None else as_point(query_point))
