"""
Tests for the JSON input records: every value's to_dict() parses back to an
equal value, and malformed documents are rejected.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from algebra.divisible import injective_hull
from algebra.errors import SquareDoesNotCommute
from algebra.picard import hbar, hbar_literal, realize
from algebra.types_cat import adjoint_r_divisible, enumerate_type_morphisms, l_of, type_catalog
from models.abelian import AbGroup, DivisibleGroup
from models.records import infer_kind, parse_record


def _round_trip(value):
    return parse_record(value.to_dict()).to_value()


@pytest.mark.parametrize("group", [
    AbGroup.trivial(),
    AbGroup.free(3),
    AbGroup(free_rank=1, torsion=(2, 6)),
])
def test_group_round_trip(group):
    assert _round_trip(group) == group


def test_group_from_presentation():
    record = parse_record({"generators": 2, "relations": [[2, 4], [6, 8]]})
    assert record.to_value() == AbGroup(torsion=(2, 4))
    assert parse_record({"generators": 2}).to_value() == AbGroup.free(2)


def test_divisible_round_trip():
    q = DivisibleGroup.from_mapping(1, {2: 1, 3: 2})
    assert _round_trip(q) == q


def test_type_and_morphism_round_trip(small_types):
    for a in small_types:
        assert _round_trip(a) == a
    for f in enumerate_type_morphisms(small_types[3], small_types[4]):
        assert _round_trip(f) == f


def test_div_morphism_round_trip(small_types):
    a = small_types[2]
    q, g1 = injective_hull(a.a1)
    emb = adjoint_r_divisible(a, q, g1)
    back = _round_trip(emb)
    assert back.key == emb.key
    assert back.f1.images[0].pruefer_part == (Fraction(1, 4),)


@pytest.mark.parametrize("build", [hbar, hbar_literal])
def test_builtin_model_round_trip(build):
    model = build()
    assert _round_trip(model) == model


def test_realized_model_round_trip(small_types):
    for a in small_types:
        model = realize(a)
        assert _round_trip(model) == model


def test_model_from_builtin_and_type(z2):
    assert parse_record({"builtin": "hbar"}).to_value() == hbar()
    record = parse_record({"type": l_of(z2).to_dict()})
    assert record.to_value() == realize(l_of(z2))


def test_catalog_record(z2, z4):
    record = parse_record({"groups": [z2.to_dict(), z4.to_dict()]})
    assert record.to_value() == type_catalog([z2, z4])
    extra = l_of(AbGroup.free(1))
    record = parse_record({"kind": "catalog", "types": [extra.to_dict(), extra.to_dict()]})
    assert record.to_value() == [extra]


@pytest.mark.parametrize("data, kind", [
    ({"rank": 1}, "group"),
    ({"generators": 1, "relations": [[3]]}, "group"),
    ({"q_rank": 1}, "divisible"),
    ({"a0": {}, "a1": {}}, "type"),
    ({"builtin": "hbar"}, "model"),
    ({"type": {"a0": {}, "a1": {}}}, "model"),
    ({"groups": []}, "catalog"),
    ({"f0": [], "f1": [], "target": {"a0": {}, "a1": {}}}, "morphism"),
    ({"f0": [], "f1": [], "target": {"pruefer": {"2": 1}}}, "div_morphism"),
    ({"kind": "type", "rank": 1}, "type"),
])
def test_infer_kind(data, kind):
    assert infer_kind(data) == kind


def test_rejects_non_objects_and_unknown_kinds():
    with pytest.raises(ValueError):
        parse_record([1, 2])
    with pytest.raises(ValueError):
        parse_record({"kind": "sheaf"})
    with pytest.raises(ValueError, match="must be a string"):
        parse_record({"kind": ["group"]})


@pytest.mark.parametrize("data", [
    {"generators": 2, "rank": 1},
    {"relations": [[2]]},
    {"rank": -1},
    {"rank": 1, "colour": "red"},
    {"builtin": "hbar", "type": {"a0": {}, "a1": {}}},
    {"kind": "model", "pi0": {"rank": 1}},
    {"kind": "model"},
])
def test_validation_errors(data):
    with pytest.raises(ValidationError):
        parse_record(data)


def test_bad_cochain_shapes(z2):
    record = parse_record({"pi0": {"rank": 1}, "pi1": z2.to_dict(), "sym": {"kind": "bilinear", "form": []}})
    with pytest.raises(ValueError):
        record.to_value()
    record = parse_record({"pi0": {"rank": 1}, "pi1": z2.to_dict(), "sym": {"kind": "constant"}})
    with pytest.raises(ValueError):
        record.to_value()


def test_algebra_errors_are_not_validation_errors(z2):
    r_z2 = {"kind": "type", "a0": z2.to_dict(), "a1": z2.to_dict(), "alpha": [[1]]}
    record = parse_record({"source": r_z2, "target": r_z2, "f0": [[1]], "f1": [[0]]})
    with pytest.raises(SquareDoesNotCommute):
        record.to_value()
