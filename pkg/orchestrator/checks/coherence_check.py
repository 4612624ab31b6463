# coherence_check.py
# Coherence of the explicit models and the realize / type_of round trip

from typing import Any, Dict, Optional, Sequence

from algebra.config import get_settings
from algebra.envelopes import end_invariants
from algebra.picard import coherence_check, hbar, hbar_literal, realize, type_of
from algebra.types_cat import l_of
from orchestrator.base_check import BaseCheck
from models.abelian import AbGroup
from models.types import TypeObj

LITERAL_WITNESS = ((1,), (1,), (1,))


class CoherenceCheck(BaseCheck):
    """
    hbar is coherent with type l(Z) and endomorphism invariants (Z, Z/2); the
    constant reading of its symmetry fails biadditivity at (1, 1, 1); every
    catalog type is realized by a coherent model whose type is the original.
    """

    def __init__(self, check_name: str = "coherence", catalog: Optional[Sequence[TypeObj]] = None):
        super().__init__(check_name=check_name, catalog=catalog)

    def _run(self, context: Dict[str, Any]) -> Dict[str, Any]:
        window = context.get("window", get_settings().coherence_window)
        z = AbGroup.free(1)
        h = hbar()
        hbar_report = coherence_check(h, window)
        literal_report = coherence_check(hbar_literal(), window)
        invariants = end_invariants(h)
        facts = {
            "hbar_coherent": hbar_report.passed,
            "hbar_type_is_l_z": type_of(h) == l_of(z),
            "literal_fails_at_1_1_1": literal_report.witness("biadditivity") == LITERAL_WITNESS,
            "hbar_end_invariants": invariants.pi0 == z and invariants.pi1 == AbGroup.cyclic(2),
        }

        round_trip_failure = None
        for a in self.catalog:
            model = realize(a)
            if not coherence_check(model).passed or type_of(model) != a:
                round_trip_failure = a.to_dict()
                self.logger.error(f"round trip fails for {a}")
                break
        facts["round_trip"] = round_trip_failure is None

        return {
            "passed": all(facts.values()),
            "facts": facts,
            "window": window,
            "hbar": hbar_report.to_dict(),
            "literal": literal_report.to_dict(),
            "counterexample": round_trip_failure,
        }
