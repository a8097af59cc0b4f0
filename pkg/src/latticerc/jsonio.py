"""JSON (de)serialization for the core types.

Rationals travel as strings "p/q"; integer points as plain int lists.
All emitters produce deterministic, sorted structures.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import LatticeRcError
from .geometry import HPolyhedron, LinearInequality, PointSet


def frac_to_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def frac_from_str(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s)
    raise LatticeRcError(f"cannot parse rational from {s!r}")


def pointset_to_json(x: PointSet) -> dict:
    return {"dim": x.dim, "points": [list(p) for p in x.points]}


def pointset_from_json(data) -> PointSet:
    try:
        return PointSet.of(int(data["dim"]), [tuple(p) for p in data["points"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise LatticeRcError(f"malformed point set: {exc}") from exc


def inequality_to_json(c: LinearInequality) -> dict:
    return {"a": [frac_to_str(x) for x in c.a], "rel": c.rel, "b": frac_to_str(c.b)}


def inequality_from_json(data) -> LinearInequality:
    try:
        return LinearInequality.of([frac_from_str(x) for x in data["a"]],
                                   data["rel"], frac_from_str(data["b"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise LatticeRcError(f"malformed constraint: {exc}") from exc


def hpolyhedron_to_json(p: HPolyhedron) -> dict:
    return {"dim": p.dim, "constraints": [inequality_to_json(c) for c in p.constraints]}


def hpolyhedron_from_json(data) -> HPolyhedron:
    try:
        return HPolyhedron.of(int(data["dim"]),
                              [inequality_from_json(c) for c in data["constraints"]])
    except (KeyError, TypeError) as exc:
        raise LatticeRcError(f"malformed polyhedron: {exc}") from exc
