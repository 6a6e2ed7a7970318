import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fcxlab.errors import BadKind, NotMember, ParseError, SchemaError
from fcxlab.instance import (
    decode_elem,
    decode_point,
    decode_rational,
    decode_set,
    encode_elem,
    encode_number,
    encode_rational,
    encode_set,
    json_arg,
    load_json,
    parse_instance,
    parse_instance_file,
)
from fcxlab.ring import chi, constant, from_values, indicator, sequence
from fcxlab.sampling import random_member, random_set
from fcxlab.spaces import CONV_SEQ, COFINITE_N, DISCRETE_N, INF, UPSet, finite

MODELS = [finite(3), DISCRETE_N, COFINITE_N, CONV_SEQ]

DOC = {
    "space": {"kind": "conv_seq"},
    "functions": {"f": {"transient": ["1/2"], "period": 2, "block": [0, 1], "inf_value": 0}},
    "sets": {"A": [0, 2, "inf"]},
}


def test_parse_valid_instance(tmp_path):
    p = tmp_path / "inst.json"
    p.write_text(json.dumps(DOC))
    inst = parse_instance_file(p)
    assert inst.space == CONV_SEQ
    assert inst.functions["f"] == sequence((Fraction(1, 2),), (0, 1), 0)
    assert inst.sets["A"] == UPSet.from_points([0, 2, INF])


def test_non_member_carries_verdict():
    doc = {"space": {"kind": "cofinite_n"}, "functions": {"f": {"period": 2, "block": [0, 1]}}}
    with pytest.raises(NotMember) as e:
        parse_instance(doc)
    assert not e.value.verdict.member
    assert "functions.f" in str(e.value)


@pytest.mark.parametrize(
    "elem",
    [
        {"period": 0, "block": []},
        {"period": 2, "block": [1]},
        {"period": "2", "block": [1, 1]},
        {"period": 1, "block": [0.5]},
        {"period": 1, "block": [1]},
        {"period": 1, "block": [1], "inf_value": True},
    ],
)
def test_schema_errors(elem):
    with pytest.raises(SchemaError):
        decode_elem(elem, CONV_SEQ)


def test_schema_errors_misc():
    with pytest.raises(SchemaError):
        decode_elem({"values": [1, 2]}, finite(3))
    with pytest.raises(SchemaError):
        decode_elem({"values": [1, 2]}, DISCRETE_N)
    with pytest.raises(SchemaError):
        decode_elem({"period": 1, "block": [1], "inf_value": 0}, DISCRETE_N)
    with pytest.raises(SchemaError):
        decode_point(-1)
    with pytest.raises(SchemaError):
        decode_rational(True)
    with pytest.raises(SchemaError):
        decode_rational("1/0")
    with pytest.raises(SchemaError):
        parse_instance({"space": {"kind": "finite", "n": 2}, "extra": 1})
    with pytest.raises(SchemaError):
        parse_instance({"functions": {}})
    with pytest.raises(BadKind):
        parse_instance({"space": {"kind": "torus"}})


def test_parse_error_location(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n  "space": {"kind": "finite",\n}')
    with pytest.raises(ParseError) as e:
        parse_instance_file(p)
    assert f"{p}:3:1" in str(e.value)
    with pytest.raises(ParseError):
        load_json("[1,", "<x>")
    with pytest.raises(ParseError):
        parse_instance_file(tmp_path / "missing.json")


def test_shorthands():
    F3 = finite(3)
    assert decode_elem({"const": "2/3"}, F3) == constant(F3, Fraction(2, 3))
    assert decode_elem({"chi": "inf"}, CONV_SEQ) == chi(CONV_SEQ, INF)
    assert decode_elem({"indicator": [0, 2]}, F3) == from_values([1, 0, 1])
    ev = {"period": 2, "block": [1, 0]}
    assert decode_elem({"indicator": ev}, DISCRETE_N) == indicator(DISCRETE_N, UPSet.evens())
    assert decode_set(ev, DISCRETE_N) == UPSet.evens()


def test_json_arg(tmp_path):
    assert json_arg('{"kind": "discrete_n"}') == {"kind": "discrete_n"}
    p = tmp_path / "s.json"
    p.write_text("[1, 2]")
    assert json_arg(str(p)) == [1, 2]


def test_encoders():
    assert encode_rational(3) == "3/1"
    assert encode_rational(Fraction(-1, 2)) == "-1/2"
    assert encode_number(float("inf")) == "inf"
    assert encode_number(4) == 4
    assert encode_set(frozenset({2, INF, 0})) == [0, 2, "inf"]


@pytest.mark.parametrize("space", MODELS, ids=str)
@given(seed=st.integers(0, 10**6))
@settings(max_examples=50, deadline=None)
def test_round_trip(space, seed):
    rng = random.Random(seed)
    f = random_member(space, rng)
    assert decode_elem(json.loads(json.dumps(encode_elem(f))), space) == f
    A = random_set(space, rng)
    assert decode_set(json.loads(json.dumps(encode_set(A))), space) == space.coerce_set(A)
