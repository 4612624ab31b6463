"""
Exception hierarchy for picardkit.

Every failure raised by the algebra layer derives from AlgebraError so that the
command-line front end can map it to the "mathematical failure" exit status.
Errors that point at a concrete offending value carry it in ``witness``.
"""

from typing import Any, Dict, Optional


class AlgebraError(Exception):
    """
    Base class for all algebra-layer failures.

    Attributes:
        witness (Dict[str, Any]): The offending generator, tuple or value, if any
    """

    def __init__(self, message: str, witness: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.witness = witness or {}

    def to_dict(self) -> Dict[str, Any]:
        """Return a report-friendly representation of the error."""
        return {
            "error": type(self).__name__,
            "message": str(self),
            "witness": self.witness,
        }


class InvalidElement(AlgebraError):
    """Coordinates do not describe an element of the group."""


class IllDefinedHom(AlgebraError):
    """A matrix does not define a homomorphism (torsion relations violated)."""


class InfiniteHomSet(AlgebraError):
    """An enumeration was requested over an infinite hom-set."""


class NotEpi(AlgebraError):
    """A homomorphism expected to be surjective is not."""


class NotMono(AlgebraError):
    """A homomorphism expected to be injective is not."""


class AlphaDomainMismatch(AlgebraError):
    """The alpha of a type does not go from A0/2A0 to the 2-torsion of A1."""


class SquareDoesNotCommute(AlgebraError):
    """A pair (f0, f1) fails the commuting square of a type morphism."""


class SourceTargetMismatch(AlgebraError):
    """Two morphisms are not composable."""


class NotEs(AlgebraError):
    """A type morphism expected to be essentially surjective is not."""


class NotFaithful(AlgebraError):
    """A type morphism expected to be faithful is not."""


class SourceNotFree(AlgebraError):
    """A lifting problem was posed with a source that has torsion."""


class IncoherentModel(AlgebraError):
    """A skeletal model violates the axioms needed to read off its type."""


class TooLarge(AlgebraError):
    """A brute-force search space exceeds the configured bound."""


class NoThetaFound(AlgebraError):
    """No monoidal structure exists over a pair that should admit one."""


class NotComputable(AlgebraError):
    """The requested invariant is outside the supported cases."""


class PostconditionFailed(AlgebraError):
    """A result failed its own defining equation; this is always a bug."""
