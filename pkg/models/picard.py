"""
Skeletal symmetric categorical groups and their morphisms.

A skeletal model has one object per element of pi_0, automorphism group pi_1
at every object, trivial associator and unit constraints, and a symmetry
2-cochain c: pi_0 x pi_0 -> pi_1. Monoidal functors carry a 2-cochain theta,
and homotopies (tracks) between them a 1-cochain t.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from math import comb
from typing import Any, Dict, Optional, Sequence, Tuple

from models.abelian import AbGroup, AbHom, GroupElement


class CochainKind(str, Enum):
    """How a 2-cochain is represented."""
    TABLE = "table"
    BILINEAR = "bilinear"
    CONSTANT = "constant"


@dataclass(frozen=True)
class Cochain:
    """
    A normalized 2-cochain with values in ``target``.

    Attributes:
        kind: TABLE (explicit nonzero entries), BILINEAR (values on generator
            pairs, extended biadditively) or CONSTANT (one value on every pair
            of nonzero arguments)
        target: Group the values lie in
        table: (x, y, value) entries; pairs not listed are zero
        form: form[i][j] is the value on generators (e_i, e_j)
        constant: The value of a CONSTANT cochain
    """

    kind: CochainKind
    target: AbGroup
    table: Tuple[Tuple[GroupElement, GroupElement, GroupElement], ...] = ()
    form: Tuple[Tuple[GroupElement, ...], ...] = ()
    constant: Optional[GroupElement] = None

    @classmethod
    def zero_table(cls, target: AbGroup) -> "Cochain":
        return cls(CochainKind.TABLE, target)

    @cached_property
    def _lookup(self) -> Dict[Tuple[GroupElement, GroupElement], GroupElement]:
        return {(x, y): v for x, y, v in self.table}

    def evaluate(self, x: Sequence[int], y: Sequence[int]) -> GroupElement:
        if self.kind == CochainKind.TABLE:
            return self._lookup.get((tuple(x), tuple(y)), self.target.zero())
        if self.kind == CochainKind.CONSTANT:
            if any(x) and any(y):
                return self.target.reduce(self.constant)
            return self.target.zero()
        total = [0] * self.target.ngens
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for k, v in enumerate(self.form[i][j]):
                    total[k] += xi * yj * v
        return self.target.reduce(total)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value}
        if self.kind == CochainKind.TABLE:
            data["entries"] = [[list(x), list(y), list(v)] for x, y, v in self.table]
        elif self.kind == CochainKind.BILINEAR:
            data["form"] = [[list(v) for v in row] for row in self.form]
        else:
            data["value"] = list(self.constant)
        return data


@dataclass(frozen=True)
class SkeletalPicard:
    """
    A skeletal symmetric categorical group (pi0, pi1, c) with trivial associator.

    Attributes:
        pi0: Group of isomorphism classes of objects
        pi1: Automorphism group of the unit
        sym: The symmetry cochain c: pi0 x pi0 -> pi1
        name: Optional label, e.g. "hbar"
    """

    pi0: AbGroup
    pi1: AbGroup
    sym: Cochain
    name: Optional[str] = None

    @property
    def is_rule(self) -> bool:
        return self.sym.kind != CochainKind.TABLE

    def c(self, x: Sequence[int], y: Sequence[int]) -> GroupElement:
        return self.sym.evaluate(x, y)

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "kind": "model",
            "pi0": self.pi0.to_dict(),
            "pi1": self.pi1.to_dict(),
            "sym": self.sym.to_dict(),
        }
        if self.name:
            data["name"] = self.name
        return data


@dataclass(frozen=True)
class MonFunctor:
    """
    A symmetric monoidal functor between skeletal models.

    Attributes:
        source: Domain model
        target: Codomain model
        f0: Induced map on pi_0
        f1: Induced map on pi_1
        theta: Monoidal structure, a normalized 2-cochain pi0 x pi0 -> pi1'
    """

    source: SkeletalPicard
    target: SkeletalPicard
    f0: AbHom
    f1: AbHom
    theta: Cochain

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "functor",
            "f0": [list(row) for row in self.f0.matrix],
            "f1": [list(row) for row in self.f1.matrix],
            "theta": self.theta.to_dict(),
        }


@dataclass(frozen=True)
class Homotopy:
    """
    A track between two functors with the same (f0, f1).

    The 1-cochain t is either an explicit table of (x, t(x)) pairs, or, for
    models with pi_0 = Z, the closed form t(n) = C(n, 2) * quadratic + n * linear.

    Attributes:
        source: Functor the track starts at
        target: Functor the track ends at
        table: (x, value) entries; elements not listed map to zero
        quadratic: Coefficient of C(n, 2) in the closed form
        linear: Coefficient of n in the closed form
    """

    source: MonFunctor
    target: MonFunctor
    table: Tuple[Tuple[GroupElement, GroupElement], ...] = ()
    quadratic: Optional[GroupElement] = None
    linear: Optional[GroupElement] = None

    def evaluate(self, x: Sequence[int]) -> GroupElement:
        group = self.source.target.pi1
        if self.quadratic is not None:
            n = x[0]
            return group.add(group.scale(comb(n, 2) if n >= 0 else n * (n - 1) // 2, self.quadratic),
                             group.scale(n, self.linear or group.zero()))
        return dict(self.table).get(tuple(x), group.zero())

    def to_dict(self) -> Dict[str, Any]:
        if self.quadratic is not None:
            return {
                "kind": "homotopy",
                "quadratic": list(self.quadratic),
                "linear": list(self.linear or ()),
            }
        return {"kind": "homotopy", "entries": [[list(x), list(v)] for x, v in self.table]}


@dataclass(frozen=True)
class CoherenceReport:
    """
    Result of checking the axioms of a model or functor.

    Attributes:
        passed: True when no axiom failed
        checked: Number of tuples examined
        window: Argument window used for rule models, None for tables
        failures: Axiom name mapped to the first witnessing tuple
        notes: Axioms that hold vacuously, with the reason
    """

    passed: bool
    checked: int
    window: Optional[int] = None
    failures: Tuple[Tuple[str, Tuple[GroupElement, ...]], ...] = ()
    notes: Tuple[Tuple[str, str], ...] = field(default=())

    def witness(self, axiom: str) -> Optional[Tuple[GroupElement, ...]]:
        return dict(self.failures).get(axiom)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "window": self.window,
            "failures": {name: [list(x) for x in w] for name, w in self.failures},
            "notes": dict(self.notes),
        }


@dataclass(frozen=True)
class HomotopyClasses:
    """
    Brute-force description of pi_0(Hom(S1, S2)).

    Attributes:
        count: Number of homotopy classes
        representatives: Lexicographically least functor of each class
        fibers: Number of classes over each realizable (f0, f1)
    """

    count: int
    representatives: Tuple[MonFunctor, ...]
    fibers: Tuple[Tuple[Tuple, int], ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "count": self.count,
            "fiber_sizes": sorted({n for _, n in self.fibers}),
            "representatives": [f.to_dict() for f in self.representatives],
        }


@dataclass(frozen=True)
class EndInvariants:
    """
    Additive invariants of the endomorphism object Hom(S, S).

    Attributes:
        pi0: The group pi_0(Hom(S, S)) when it is determined
        pi0_order: Its cardinality, None when infinite
        pi1: pi_1(Hom(S, S)) = hom(pi_0 S, pi_1 S)
        method: "classified" (read off the exact sequence) or "brute_force"
    """

    pi0: Optional[AbGroup]
    pi0_order: Optional[int]
    pi1: AbGroup
    method: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pi0": self.pi0.to_dict() if self.pi0 is not None else None,
            "pi0_order": self.pi0_order,
            "pi1": self.pi1.to_dict(),
            "method": self.method,
        }
