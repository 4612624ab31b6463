"""
Objects and morphisms of the category TYPES.

An object is a triple (A0, A1, alpha) with alpha: A0/2A0 -> 2-torsion of A1.
Morphisms are pairs (f0, f1) making the mod-2 square commute. Morphisms into
r(Q) for a divisible Q are kept separately as DivTypeMor, since Q is not
finitely generated.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from algebra.errors import AlphaDomainMismatch
from models.abelian import AbGroup, AbHom, DivHom, DivisibleGroup


@dataclass(frozen=True)
class TypeObj:
    """
    An object (A0, A1, alpha) of TYPES.

    Attributes:
        a0: The group playing the role of pi_0
        a1: The group playing the role of pi_1
        alpha: Homomorphism two_quotient(a0) -> two_torsion(a1), a binary matrix
    """

    a0: AbGroup
    a1: AbGroup
    alpha: AbHom

    def __post_init__(self) -> None:
        from algebra.abelian import two_quotient, two_torsion

        expected_source = two_quotient(self.a0)[0]
        expected_target = two_torsion(self.a1)[0]
        if self.alpha.source != expected_source or self.alpha.target != expected_target:
            raise AlphaDomainMismatch(
                f"alpha must map {expected_source} -> {expected_target}, "
                f"got {self.alpha.source} -> {self.alpha.target}"
            )

    def __str__(self) -> str:
        return f"({self.a0}, {self.a1}, {[list(r) for r in self.alpha.matrix]})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "type",
            "a0": self.a0.to_dict(),
            "a1": self.a1.to_dict(),
            "alpha": [list(row) for row in self.alpha.matrix],
        }


@dataclass(frozen=True)
class TypeMor:
    """
    A morphism (f0, f1) between TypeObjs; build through make_morphism to have
    the commuting square checked.
    """

    source: TypeObj
    target: TypeObj
    f0: AbHom
    f1: AbHom

    @property
    def key(self):
        """Hashable matrix pair identifying the morphism between fixed objects."""
        return (self.f0.matrix, self.f1.matrix)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "morphism",
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "f0": [list(row) for row in self.f0.matrix],
            "f1": [list(row) for row in self.f1.matrix],
        }


@dataclass(frozen=True)
class DivTypeMor:
    """
    A morphism A -> r(Q) for a divisible group Q.

    Attributes:
        source: The TypeObj A
        target: The divisible group Q
        f0: A0 -> Q, landing in the 2-torsion of Q
        f1: A1 -> Q
    """

    source: TypeObj
    target: DivisibleGroup
    f0: DivHom
    f1: DivHom

    @property
    def key(self):
        return (self.f0.images, self.f1.images)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "div_morphism",
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "f0": [img.to_dict() for img in self.f0.images],
            "f1": [img.to_dict() for img in self.f1.images],
        }


@dataclass(frozen=True)
class FragmentReport:
    """
    Outcome of an exhaustive projectivity/injectivity check.

    Attributes:
        passed: True when every lifting/extension problem was solved
        problems_tested: Number of problems examined
        counterexample: The first unsolvable problem, if any
    """

    passed: bool
    problems_tested: int
    counterexample: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "problems_tested": self.problems_tested,
            "counterexample": self.counterexample,
        }
