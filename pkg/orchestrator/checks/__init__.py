"""
Verification checks run by the verify orchestrator.
"""

from .adjunction_check import AdjunctionCheck
from .coherence_check import CoherenceCheck
from .envelope_check import EnvelopeCheck
from .exact_sequence_check import ExactSequenceCheck, HomotopyGroupCheck
from .fragment_check import InjectiveCheck, ProjectiveCheck

__all__ = [
    "AdjunctionCheck",
    "CoherenceCheck",
    "EnvelopeCheck",
    "ExactSequenceCheck",
    "HomotopyGroupCheck",
    "InjectiveCheck",
    "ProjectiveCheck",
]
