"""JSON encodings for every object the CLI reads or writes.

Rationals are strings "p/q" (or "p"), infinity is the string "inf".
Vectors are arrays, matrices arrays of row arrays.  Puiseux elements are
term lists [{"c": "p/q", "e": "a/b"}, ...]; zero is the empty list.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UsageError
from .matroid import ValuatedMatroid
from .morphism import GroundSetMap
from .puiseux import FieldMatrix, PuiseuxElement
from .quiver import QuiverRepresentation, RepArrow
from .trop import INF, TropMatrix, TropValue, TropVector


def value_to_json(v: TropValue) -> str:
    return "inf" if v.is_inf else str(v.value)


def value_from_json(s) -> TropValue:
    if s == "inf":
        return INF
    if isinstance(s, bool):
        raise UsageError("booleans are not tropical values")
    if isinstance(s, (int, str)):
        try:
            return TropValue(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError("bad rational %r: %s" % (s, exc))
    raise UsageError("bad tropical value %r" % (s,))


def vector_to_json(v: TropVector):
    return [value_to_json(e) for e in v]


def vector_from_json(data) -> TropVector:
    if not isinstance(data, list) or not data:
        raise UsageError("a vector must be a nonempty array")
    return TropVector([value_from_json(e) for e in data])


def trop_matrix_to_json(m: TropMatrix):
    return [[value_to_json(e) for e in row] for row in m.rows]


def trop_matrix_from_json(data) -> TropMatrix:
    if not isinstance(data, list) or not data:
        raise UsageError("a matrix must be a nonempty array of rows")
    return TropMatrix([[value_from_json(e) for e in row] for row in data])


def matroid_to_json(m: ValuatedMatroid):
    return {
        "n": m.n,
        "r": m.r,
        "values": [[list(b), value_to_json(v)] for b, v in sorted(m.table().items())],
    }


def matroid_from_json(data) -> ValuatedMatroid:
    try:
        n, r, values = data["n"], data["r"], data["values"]
    except (TypeError, KeyError) as exc:
        raise UsageError("matroid object needs n, r, values: %s" % exc)
    table = {}
    for item in values:
        if not isinstance(item, list) or len(item) != 2:
            raise UsageError("matroid values must be [subset, value] pairs")
        subset, v = item
        table[tuple(subset)] = value_from_json(v)
    return ValuatedMatroid(n, r, table)


def puiseux_to_json(p: PuiseuxElement):
    return [{"c": str(c), "e": str(e)} for e, c in p.terms()]


def puiseux_from_json(data) -> PuiseuxElement:
    if isinstance(data, (int, str)):
        # shorthand: a bare rational constant
        try:
            return PuiseuxElement.const(Fraction(data))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError("bad rational %r: %s" % (data, exc))
    if not isinstance(data, list):
        raise UsageError("a Puiseux element must be a term list or a rational")
    terms = {}
    for t in data:
        try:
            c, e = Fraction(t["c"]), Fraction(t["e"])
        except (TypeError, KeyError, ValueError, ZeroDivisionError) as exc:
            raise UsageError("bad Puiseux term %r: %s" % (t, exc))
        terms[e] = terms.get(e, Fraction(0)) + c
    return PuiseuxElement(terms)


def field_matrix_to_json(m: FieldMatrix):
    return [[puiseux_to_json(e) for e in row] for row in m.rows]


def field_matrix_from_json(data) -> FieldMatrix:
    if not isinstance(data, list) or not data:
        raise UsageError("a matrix must be a nonempty array of rows")
    return FieldMatrix([[puiseux_from_json(e) for e in row] for row in data])


def map_to_json(f: GroundSetMap):
    entries = []
    for i in range(1, f.n + 1):
        to = "o" if f.f1[i] == 0 else f.f1[i]
        entries.append({"i": i, "to": to, "shift": value_to_json(f.f2[i])})
    return {"n": f.n, "f": entries}


def map_from_json(data) -> GroundSetMap:
    try:
        n, entries = data["n"], data["f"]
    except (TypeError, KeyError) as exc:
        raise UsageError("map object needs n and f: %s" % exc)
    assignments = {}
    for entry in entries:
        try:
            i, to, shift = entry["i"], entry["to"], entry["shift"]
        except (TypeError, KeyError) as exc:
            raise UsageError("bad map entry %r: %s" % (entry, exc))
        if i == "o":
            continue  # the origin is implicit
        assignments[int(i)] = (0 if to == "o" else int(to), value_from_json(shift))
    return GroundSetMap(n, assignments)


def representation_from_json(data) -> QuiverRepresentation:
    try:
        n = data["n"]
        vertices = data["vertices"]
        arrows = data["arrows"]
        dim = data["dim"]
    except (TypeError, KeyError) as exc:
        raise UsageError("quiver object needs n, vertices, arrows, dim: %s" % exc)
    rep_arrows = []
    for a in arrows:
        try:
            src, dst = a["src"], a["dst"]
        except (TypeError, KeyError) as exc:
            raise UsageError("bad arrow %r: %s" % (a, exc))
        field = field_matrix_from_json(a["matrix_field"]) if "matrix_field" in a else None
        trop = trop_matrix_from_json(a["matrix_trop"]) if "matrix_trop" in a else None
        rep_arrows.append(RepArrow(src=src, dst=dst, field=field, trop=trop))
    return QuiverRepresentation(n, vertices, rep_arrows, dim)


def representation_to_json(rep: QuiverRepresentation):
    arrows = []
    for idx, a in enumerate(rep.arrows):
        entry = {"src": a.src, "dst": a.dst}
        if a.field is not None:
            entry["matrix_field"] = field_matrix_to_json(a.field)
        entry["matrix_trop"] = trop_matrix_to_json(rep.trop_matrix(idx))
        arrows.append(entry)
    return {
        "n": rep.n,
        "vertices": list(rep.vertices),
        "arrows": arrows,
        "dim": dict(rep.dim),
    }


def matroid_tuple_from_json(data):
    if not isinstance(data, dict):
        raise UsageError("a matroid tuple must be an object keyed by vertex")
    return {v: matroid_from_json(m) for v, m in data.items()}


def matroid_tuple_to_json(mus):
    return {v: matroid_to_json(m) for v, m in mus.items()}


def witness_from_json(data):
    if not isinstance(data, dict):
        raise UsageError("a witness must be an object keyed by vertex")
    return {v: field_matrix_from_json(m) for v, m in data.items()}
