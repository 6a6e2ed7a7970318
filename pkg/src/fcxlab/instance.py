"""JSON encoding/decoding of spaces, sets and ring elements; instance files.

Instance file layout::

    {"space": {"kind": "conv_seq"},
     "functions": {"f": {"transient": ["1/2"], "period": 2, "block": [0, 1], "inf_value": 0}},
     "sets": {"A": [0, 2, "inf"]}}

Element shorthands: ``{"values": [...]}`` (finite models), ``{"const": r}``,
``{"chi": point}``, ``{"indicator": set}``.  Rationals are ints or
``"num/den"`` strings; floats are rejected because they are inexact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import NotMember, ParseError, SchemaError
from .ring import INFINITE, RingElem, chi, constant, indicator, membership
from .spaces import INF, SpaceModel, UPSet, make_space, point_key

# encoding ---------------------------------------------------------------------


def encode_rational(r) -> str:
    r = Fraction(r)
    return f"{r.numerator}/{r.denominator}"


def encode_point(x):
    return "inf" if x is INF else x


def encode_number(x):
    """JSON form of a metric that may be infinite."""
    return "inf" if x == math.inf else x


def encode_space(space: SpaceModel) -> dict:
    d = {"kind": space.kind.value}
    if space.n is not None:
        d["n"] = space.n
    return d


def encode_set(A):
    if isinstance(A, UPSet):
        return A.to_json()
    if A is INFINITE:
        return "infinite"
    return [encode_point(x) for x in sorted(A, key=point_key)]


def encode_elem(f: RingElem) -> dict:
    if f.carrier.is_finite:
        return {"values": [encode_rational(v) for v in f.values]}
    d = {
        "transient": [encode_rational(v) for v in f.transient],
        "period": f.period,
        "block": [encode_rational(v) for v in f.block],
    }
    if f.carrier.infinity:
        d["inf_value"] = encode_rational(f.inf_value)
    return d


# decoding ---------------------------------------------------------------------


def _fail(where: str, msg: str):
    raise SchemaError(f"{where}: {msg}")


def decode_rational(v, where: str = "value") -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        _fail(where, f"expected an integer or 'num/den' string, got {v!r}")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError):
        _fail(where, f"malformed rational {v!r}")


def decode_point(x, where: str = "point"):
    if x == "inf":
        return INF
    if isinstance(x, bool) or not isinstance(x, int) or x < 0:
        _fail(where, f"expected a natural number or 'inf', got {x!r}")
    return x


def decode_space(d, where: str = "space") -> SpaceModel:
    if not isinstance(d, dict):
        _fail(where, "expected an object")
    if "kind" not in d:
        _fail(where, "missing 'kind'")
    extra = set(d) - {"kind", "n", "topology"}
    if extra:
        _fail(where, f"unknown fields {sorted(extra)}")
    return make_space(d["kind"], d.get("n"), d.get("topology"))


def _periodic_fields(d: dict, where: str):
    if "period" not in d or "block" not in d:
        _fail(where, "periodic form needs 'period' and 'block'")
    p = d["period"]
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        _fail(f"{where}.period", f"must be a positive integer, got {p!r}")
    block, transient = d["block"], d.get("transient", [])
    if not isinstance(block, list) or len(block) != p:
        _fail(f"{where}.block", f"must be a list of length period={p}")
    if not isinstance(transient, list):
        _fail(f"{where}.transient", "must be a list")
    return transient, block


def decode_set(d, space: SpaceModel, where: str = "set"):
    if isinstance(d, list):
        return space.coerce_set(frozenset(decode_point(x, f"{where}[{i}]") for i, x in enumerate(d)))
    if isinstance(d, dict):
        transient, block = _periodic_fields(d, where)
        bits = []
        for i, b in enumerate(transient + block):
            if b not in (0, 1) or isinstance(b, float):
                _fail(where, f"bit {i} must be 0 or 1, got {b!r}")
            bits.append(bool(b))
        inf = d.get("infinity", False)
        if not isinstance(inf, bool):
            _fail(f"{where}.infinity", "must be a boolean")
        S = UPSet(tuple(bits[: len(transient)]), tuple(bits[len(transient):]), inf)
        return space.coerce_set(S)
    _fail(where, "expected a list of points or a periodic set object")


def decode_elem(d, space: SpaceModel, where: str = "function") -> RingElem:
    """Decode an element and check it is a member of C_c(X)_F over ``space``."""
    f = _decode_elem(d, space, where)
    verdict = membership(f, space)
    if not verdict.member:
        raise NotMember(f"{where}: not in C_c(X)_F over {space} ({verdict.reason.value})", verdict)
    return f


def _decode_elem(d, space: SpaceModel, where: str) -> RingElem:
    if not isinstance(d, dict):
        _fail(where, "expected an object")
    c = space.carrier
    if "const" in d:
        return constant(space, decode_rational(d["const"], f"{where}.const"))
    if "chi" in d:
        return chi(space, decode_point(d["chi"], f"{where}.chi"))
    if "indicator" in d:
        return indicator(space, decode_set(d["indicator"], space, f"{where}.indicator"))
    if "values" in d:
        if not c.is_finite:
            _fail(where, f"'values' form needs a finite space, not {space}")
        vals = d["values"]
        if not isinstance(vals, list) or len(vals) != c.size:
            _fail(f"{where}.values", f"expected {c.size} values")
        return RingElem(c, tuple(decode_rational(v, f"{where}.values[{i}]") for i, v in enumerate(vals)))
    if c.is_finite:
        _fail(where, "finite spaces take the 'values' form")
    transient, block = _periodic_fields(d, where)
    tr = tuple(decode_rational(v, f"{where}.transient[{i}]") for i, v in enumerate(transient))
    bl = tuple(decode_rational(v, f"{where}.block[{i}]") for i, v in enumerate(block))
    inf = None
    if c.infinity:
        if "inf_value" not in d:
            _fail(where, "ConvSeq elements need 'inf_value'")
        inf = decode_rational(d["inf_value"], f"{where}.inf_value")
    elif "inf_value" in d:
        _fail(where, f"'inf_value' given but {space} has no point at infinity")
    return RingElem(c, tr, bl, inf)


# files ------------------------------------------------------------------------


def load_json(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from None


def read_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror}") from None
    return load_json(text, str(path))


def json_arg(arg: str):
    """A CLI argument that is either a path to a JSON file or inline JSON."""
    p = Path(arg)
    if p.suffix == ".json" or p.exists():
        return read_json(p)
    return load_json(arg, "<argument>")


@dataclass(frozen=True)
class Instance:
    space: SpaceModel
    functions: dict = field(default_factory=dict)
    sets: dict = field(default_factory=dict)


def parse_instance(doc, source: str = "<instance>") -> Instance:
    if not isinstance(doc, dict):
        raise SchemaError(f"{source}: top level must be an object")
    extra = set(doc) - {"space", "functions", "sets"}
    if extra:
        raise SchemaError(f"{source}: unknown fields {sorted(extra)}")
    if "space" not in doc:
        raise SchemaError(f"{source}: missing 'space'")
    space = decode_space(doc["space"])
    fns, sets = doc.get("functions", {}), doc.get("sets", {})
    if not isinstance(fns, dict) or not isinstance(sets, dict):
        raise SchemaError(f"{source}: 'functions' and 'sets' must be objects")
    return Instance(
        space,
        {k: decode_elem(v, space, f"functions.{k}") for k, v in fns.items()},
        {k: decode_set(v, space, f"sets.{k}") for k, v in sets.items()},
    )


def parse_instance_file(path) -> Instance:
    return parse_instance(read_json(path), str(path))


def space_from(doc) -> SpaceModel:
    """A space from either a bare space object or an instance document."""
    if isinstance(doc, dict) and "space" in doc:
        return decode_space(doc["space"])
    return decode_space(doc)

