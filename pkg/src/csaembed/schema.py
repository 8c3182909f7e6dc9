"""JSON encoding of algebras, profiles and solver results.

Schemas::

    GlobalCSA         {"degree": int, "invariants": [{"place": str, "kind": "finite|real|complex", "num": int, "den": int}]}
    ExtensionProfile  {"degree": int, "splitting": [{"place": str, "parts": [{"id": str, "degree": int}]}]}
    WedderburnData    {"dim_delta": int, "module_dim": int, "factors": [{"source": int, "m": int, "dim_d": int, "e": int?, "tangent_dim": int?}]}
    SourceFactor      {"center": ExtensionProfile, "degree": int?, "invariants": [{"place": str, "num": int, "den": int}]?}
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import GlobalSourceFactor, LocalRing, TargetSimple, TensorFactorData, WedderburnData
from .brauer import PLACE_KINDS, ExtensionProfile, GlobalCSA, Place
from .charpoly import CharpolyReport, FactoredPolynomial, PolyFactor
from .core_arith import QModZ
from .errors import SchemaError

SCHEMA_VERSION = "1.0"


class ParseError(SchemaError):
    code = "ParseError"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _get(obj: Any, key: str, path: str, kind: type | tuple[type, ...], default: Any = ...) -> Any:
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: expected an object")
    if key not in obj:
        if default is ...:
            raise SchemaError(f"{path}.{key}: missing field")
        return default
    value = obj[key]
    # bool is an int subclass; reject it where ints are expected
    if isinstance(value, bool) and kind is not bool:
        raise SchemaError(f"{path}.{key}: expected {_kind_name(kind)}, got boolean")
    if not isinstance(value, kind):
        raise SchemaError(f"{path}.{key}: expected {_kind_name(kind)}, got {type(value).__name__}")
    return value


def _kind_name(kind: type | tuple[type, ...]) -> str:
    if isinstance(kind, tuple):
        return " or ".join(k.__name__ for k in kind)
    return {int: "integer", str: "string", list: "array", dict: "object", bool: "boolean"}.get(kind, kind.__name__)


def _positive(value: int, path: str) -> int:
    if value < 1:
        raise SchemaError(f"{path}: must be positive, got {value}")
    return value


def _fraction(obj: dict, path: str) -> QModZ:
    num = _get(obj, "num", path, int)
    den = _positive(_get(obj, "den", path, int), f"{path}.den")
    return QModZ.from_rational(Fraction(num, den))


def parse_csa(obj: Any, path: str = "$") -> GlobalCSA:
    degree = _positive(_get(obj, "degree", path, int), f"{path}.degree")
    items = []
    for i, entry in enumerate(_get(obj, "invariants", path, list, [])):
        p = f"{path}.invariants[{i}]"
        kind = _get(entry, "kind", p, str, "finite")
        if kind not in PLACE_KINDS:
            raise SchemaError(f"{p}.kind: expected one of {list(PLACE_KINDS)}, got {kind!r}")
        items.append((Place(_get(entry, "place", p, str), kind), _fraction(entry, p)))
    ids = [pl.id for pl, _ in items]
    if len(set(ids)) != len(ids):
        raise SchemaError(f"{path}.invariants: duplicate place ids")
    return GlobalCSA.from_map(degree, items)


def parse_profile(obj: Any, path: str = "$") -> ExtensionProfile:
    degree = _positive(_get(obj, "degree", path, int), f"{path}.degree")
    splitting = {}
    for i, entry in enumerate(_get(obj, "splitting", path, list, [])):
        p = f"{path}.splitting[{i}]"
        v = _get(entry, "place", p, str)
        if v in splitting:
            raise SchemaError(f"{p}.place: {v!r} listed twice")
        parts = []
        for j, part in enumerate(_get(entry, "parts", p, list)):
            q = f"{p}.parts[{j}]"
            parts.append((_get(part, "id", q, str), _positive(_get(part, "degree", q, int), f"{q}.degree")))
        splitting[v] = parts
    return ExtensionProfile.from_map(degree, splitting)


def parse_source_factor(obj: Any, path: str = "$") -> GlobalSourceFactor:
    center = parse_profile(_get(obj, "center", path, dict), f"{path}.center")
    degree = _positive(_get(obj, "degree", path, int, 1), f"{path}.degree")
    invs = []
    for i, entry in enumerate(_get(obj, "invariants", path, list, [])):
        p = f"{path}.invariants[{i}]"
        invs.append((_get(entry, "place", p, str), _fraction(entry, p)))
    return GlobalSourceFactor(center, degree, tuple(invs))


def parse_wedderburn(obj: Any, path: str = "$") -> tuple[TargetSimple, WedderburnData]:
    dim_delta = _positive(_get(obj, "dim_delta", path, int), f"{path}.dim_delta")
    module_dim = _positive(_get(obj, "module_dim", path, int), f"{path}.module_dim")
    factors = []
    raw = _get(obj, "factors", path, list)
    if not raw:
        raise SchemaError(f"{path}.factors: at least one factor is required")
    for i, entry in enumerate(raw):
        p = f"{path}.factors[{i}]"
        e = _get(entry, "e", p, int, None)
        t = _get(entry, "tangent_dim", p, int, None)
        ring = None
        if e is not None or t is not None:
            try:
                ring = LocalRing(1 if e is None else e, 0 if t is None else t)
            except ValueError as exc:
                raise SchemaError(f"{p}: {exc}") from exc
        source = _get(entry, "source", p, int, 0)
        if source < 0:
            raise SchemaError(f"{p}.source: must be nonnegative")
        factors.append(
            TensorFactorData(
                _positive(_get(entry, "m", p, int), f"{p}.m"),
                _positive(_get(entry, "dim_d", p, int), f"{p}.dim_d"),
                source,
                ring,
            )
        )
    return TargetSimple(dim_delta, module_dim), WedderburnData(dim_delta, tuple(factors))


def parse_polynomial(obj: Any, path: str = "$") -> FactoredPolynomial:
    factors = []
    for i, entry in enumerate(_get(obj, "factors", path, list)):
        p = f"{path}.factors[{i}]"
        field = _get(entry, "field", p, dict, None)
        factors.append(
            PolyFactor(
                _positive(_get(entry, "degree", p, int), f"{p}.degree"),
                _positive(_get(entry, "multiplicity", p, int), f"{p}.multiplicity"),
                None if field is None else parse_profile(field, f"{p}.field"),
            )
        )
    return FactoredPolynomial(tuple(factors))


def csa_to_json(A: GlobalCSA) -> dict:
    return {
        "degree": A.degree,
        "invariants": [
            {"place": p.id, "kind": p.kind, "num": x.num, "den": x.den} for p, x in A.invariants
        ],
    }


def profile_to_json(K: ExtensionProfile) -> dict:
    return {
        "degree": K.degree,
        "splitting": [
            {"place": v, "parts": [{"id": w, "degree": kw} for w, kw in parts]} for v, parts in K.splitting
        ],
    }


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def verdict_to_json(verdict) -> dict:
    return {
        "status": verdict.status,
        "n": verdict.n,
        "k": verdict.k,
        "capacity": verdict.capacity,
        "local": [
            {
                "place": r.place.id,
                "kind": r.place.kind,
                "d_v": r.d_v,
                "s_v": r.s_v,
                "target": r.target,
                "feasible": r.feasible,
                "parts": [{"id": p.id, "k_w": p.k_w, "c_w": p.c_w, "ell_w": p.ell_w} for p in r.per_w],
                "representatives": [list(x) for x in r.representatives],
            }
            for r in verdict.reports
        ],
        "obstruction": [
            {"place": e.place, "over": e.over, "x": fraction_str(e.x), "class": str(e.cls)}
            for e in verdict.obstruction.entries
        ],
    }


def charpoly_to_json(report: CharpolyReport) -> dict:
    return {
        "admissible": report.admissible,
        "factors": [
            {
                "degree": r.degree,
                "multiplicity": r.multiplicity,
                "n_i": r.n_i,
                "capacity": r.capacity,
                "passed": r.passed,
            }
            for r in report.factors
        ],
    }
