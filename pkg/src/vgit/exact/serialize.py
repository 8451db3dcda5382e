"""JSON encoding for exact data.

Integers beyond 64 bits become decimal strings and non-integral rationals
become ``"p/q"`` strings, so the output round-trips through any JSON reader.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any

_INT64 = 2**63


def encode_number(x) -> int | str:
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return f"{x.numerator}/{x.denominator}"
        x = x.numerator
    x = int(x)
    if -_INT64 <= x < _INT64:
        return x
    return str(x)


def decode_number(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(int(x))


def to_jsonable(obj: Any) -> Any:
    """Recursively convert tuples, sets, Fractions and objects with ``to_json``."""
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return encode_number(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def cone_to_json(c) -> dict:
    return {
        "ambient_dim": c.ambient_dim,
        "generators": to_jsonable(c.generators),
        "facet_normals": to_jsonable(c.facet_normals),
        "lineality_basis": to_jsonable(c.lineality_basis),
        "equations": to_jsonable(c.equations),
    }


def fan_from_json(data: dict, ambient_dim: int):
    from .polyhedron import Fan

    rays = tuple(tuple(int(decode_number(x)) for x in r) for r in data["rays"])
    cones = tuple(tuple(int(i) for i in c) for c in data["max_cones"])
    lin = tuple(tuple(int(decode_number(x)) for x in r) for r in data.get("lineality", []))
    return Fan(ambient_dim, rays, cones, lin)
