"""
Input records for the command-line front end.

Each record validates the shape of one JSON document and builds the matching
algebra value through to_value(). Every value's to_dict() output parses back
through these records to an equal value.
"""

from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Type, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.abelian import AbGroup, AbHom, DivHom, DivisibleGroup
from models.picard import Cochain, CochainKind, SkeletalPicard
from models.types import DivTypeMor, TypeMor, TypeObj


class _Record(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class GroupRecord(_Record):
    """
    A finitely generated abelian group, either as a presentation
    {generators, relations} or in invariant form {rank, torsion}.
    """

    kind: Literal["group"] = "group"
    generators: Optional[int] = Field(default=None, ge=0)
    relations: List[List[int]] = Field(default_factory=list)
    rank: Optional[int] = Field(default=None, ge=0)
    torsion: List[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def _one_form(self) -> "GroupRecord":
        if self.generators is not None and (self.rank is not None or self.torsion):
            raise ValueError("give either generators/relations or rank/torsion, not both")
        if self.generators is None and self.relations:
            raise ValueError("relations need a generator count")
        return self

    def to_value(self) -> AbGroup:
        if self.generators is not None:
            from algebra.abelian import canonical_form

            group, _ = canonical_form(self.relations, self.generators)
            return group
        return AbGroup.from_orders(self.rank or 0, self.torsion)


class DivisibleRecord(_Record):
    """Q^q_rank + sum of Z(p^inf)^s; pruefer maps primes to multiplicities."""

    kind: Literal["divisible"] = "divisible"
    q_rank: int = Field(default=0, ge=0)
    pruefer: Dict[int, int] = Field(default_factory=dict)

    def to_value(self) -> DivisibleGroup:
        return DivisibleGroup.from_mapping(self.q_rank, self.pruefer)


class TypeRecord(_Record):
    kind: Literal["type"] = "type"
    a0: GroupRecord
    a1: GroupRecord
    alpha: List[List[int]] = Field(default_factory=list)

    def to_value(self) -> TypeObj:
        from algebra.types_cat import make_type_from_matrix

        return make_type_from_matrix(self.a0.to_value(), self.a1.to_value(), self.alpha)


class MorphismRecord(_Record):
    kind: Literal["morphism"] = "morphism"
    source: TypeRecord
    target: TypeRecord
    f0: List[List[int]]
    f1: List[List[int]]

    def to_value(self) -> TypeMor:
        from algebra.types_cat import make_morphism

        src, tgt = self.source.to_value(), self.target.to_value()
        f0 = AbHom(src.a0, tgt.a0, tuple(map(tuple, self.f0)))
        f1 = AbHom(src.a1, tgt.a1, tuple(map(tuple, self.f1)))
        return make_morphism(src, tgt, f0, f1)


class DivElementRecord(_Record):
    """Rational coordinates written as strings such as "1/4"."""

    q: List[str] = Field(default_factory=list)
    pruefer: List[str] = Field(default_factory=list)


class DivMorphismRecord(_Record):
    """A morphism A -> r(Q) given by the images of A0's and A1's generators in Q."""

    kind: Literal["div_morphism"] = "div_morphism"
    source: TypeRecord
    target: DivisibleRecord
    f0: List[DivElementRecord]
    f1: List[DivElementRecord]

    def to_value(self) -> DivTypeMor:
        from algebra.types_cat import make_div_morphism

        src, q = self.source.to_value(), self.target.to_value()

        def images(records: List[DivElementRecord]):
            return tuple(
                q.element([Fraction(x) for x in r.q], [Fraction(x) for x in r.pruefer])
                for r in records
            )

        return make_div_morphism(
            src, q, DivHom(src.a0, q, images(self.f0)), DivHom(src.a1, q, images(self.f1))
        )


class CochainRecord(_Record):
    """
    A symmetry cochain: "table" entries [x, y, value], a "bilinear" form
    on generator pairs, or one "constant" value on nonzero pairs.
    """

    kind: Literal["table", "bilinear", "constant"] = "table"
    entries: List[List[List[int]]] = Field(default_factory=list)
    form: List[List[List[int]]] = Field(default_factory=list)
    value: Optional[List[int]] = None

    def to_value(self, pi0: AbGroup, pi1: AbGroup) -> Cochain:
        kind = CochainKind(self.kind)
        if kind == CochainKind.TABLE:
            table = []
            for entry in self.entries:
                if len(entry) != 3:
                    raise ValueError(f"table entries are [x, y, value], got {entry}")
                x, y, v = entry
                v = pi1.reduce(v)
                if any(v):
                    table.append((pi0.reduce(x), pi0.reduce(y), v))
            return Cochain(kind, pi1, table=tuple(table))
        if kind == CochainKind.BILINEAR:
            n = pi0.ngens
            if len(self.form) != n or any(len(row) != n for row in self.form):
                raise ValueError(f"a bilinear form on {pi0} needs {n}x{n} entries")
            form = tuple(tuple(pi1.reduce(v) for v in row) for row in self.form)
            return Cochain(kind, pi1, form=form)
        if self.value is None:
            raise ValueError("a constant cochain needs a value")
        return Cochain(kind, pi1, constant=pi1.reduce(self.value))


class ModelRecord(_Record):
    """
    A skeletal model: a builtin ("hbar", "hbar-literal"), the realization of a
    type, or explicit pi0, pi1 and symmetry cochain.
    """

    kind: Literal["model"] = "model"
    builtin: Optional[Literal["hbar", "hbar-literal"]] = None
    type: Optional[TypeRecord] = None
    pi0: Optional[GroupRecord] = None
    pi1: Optional[GroupRecord] = None
    sym: Optional[CochainRecord] = None
    name: Optional[str] = None

    @model_validator(mode="after")
    def _one_source(self) -> "ModelRecord":
        given = [self.builtin is not None, self.type is not None, self.pi0 is not None]
        if sum(given) != 1:
            raise ValueError("a model needs exactly one of builtin, type or pi0/pi1/sym")
        if self.pi0 is not None and self.pi1 is None:
            raise ValueError("an explicit model needs pi1")
        return self

    def to_value(self) -> SkeletalPicard:
        from algebra.picard import hbar, hbar_literal, realize

        if self.builtin == "hbar":
            return hbar()
        if self.builtin == "hbar-literal":
            return hbar_literal()
        if self.type is not None:
            return realize(self.type.to_value())
        pi0, pi1 = self.pi0.to_value(), self.pi1.to_value()
        sym = self.sym.to_value(pi0, pi1) if self.sym else Cochain.zero_table(pi1)
        return SkeletalPicard(pi0, pi1, sym, self.name)


class CatalogRecord(_Record):
    """A catalog of types: every type over ``groups``, plus any listed ``types``."""

    kind: Literal["catalog"] = "catalog"
    groups: List[GroupRecord] = Field(default_factory=list)
    types: List[TypeRecord] = Field(default_factory=list)

    def to_value(self) -> List[TypeObj]:
        from algebra.types_cat import type_catalog

        catalog = type_catalog([g.to_value() for g in self.groups]) if self.groups else []
        for t in self.types:
            value = t.to_value()
            if value not in catalog:
                catalog.append(value)
        return catalog


AnyRecord = Union[
    GroupRecord,
    DivisibleRecord,
    TypeRecord,
    MorphismRecord,
    DivMorphismRecord,
    ModelRecord,
    CatalogRecord,
]

RECORD_TYPES: Dict[str, Type[_Record]] = {
    "group": GroupRecord,
    "divisible": DivisibleRecord,
    "type": TypeRecord,
    "morphism": MorphismRecord,
    "div_morphism": DivMorphismRecord,
    "model": ModelRecord,
    "catalog": CatalogRecord,
}


def infer_kind(data: Dict[str, Any]) -> str:
    """The record kind named by ``kind``, or guessed from the keys present."""
    if "kind" in data:
        if not isinstance(data["kind"], str):
            raise ValueError(f"record kind must be a string, got {type(data['kind']).__name__}")
        return data["kind"]
    keys = set(data)
    if keys & {"groups", "types"}:
        return "catalog"
    if keys & {"builtin", "pi0", "sym"} or ("type" in keys and "a0" not in keys):
        return "model"
    if "f0" in keys:
        target = data.get("target")
        if isinstance(target, dict) and (target.get("kind") == "divisible" or {"q_rank", "pruefer"} & set(target)):
            return "div_morphism"
        return "morphism"
    if "a0" in keys:
        return "type"
    if keys & {"q_rank", "pruefer"}:
        return "divisible"
    return "group"


def parse_record(data: Any) -> AnyRecord:
    """
    Validate a decoded JSON document as one of the record kinds.

    Raises:
        ValueError: If the document is not an object or names an unknown or
            non-string kind
        pydantic.ValidationError: If the fields do not fit the kind
    """
    if not isinstance(data, dict):
        raise ValueError(f"expected a JSON object, got {type(data).__name__}")
    kind = infer_kind(data)
    if kind not in RECORD_TYPES:
        raise ValueError(f"unknown record kind '{kind}'")
    return RECORD_TYPES[kind].model_validate(data)
