# exact_sequence_check.py
# Brute-force audit of pi_0 and pi_1 of Hom(S1, S2) for every pair of realized catalog types

from itertools import product
from typing import Any, Dict, List, Optional, Sequence

from algebra.abelian import ext_group
from algebra.functors import count_additive_homotopies, homotopy_classes, pi0_hom_predicted, pi1_hom
from algebra.picard import realize
from orchestrator.base_check import BaseCheck
from models.types import TypeObj


class ExactSequenceCheck(BaseCheck):
    """
    For every ordered pair (A, B) of catalog types, compare the number of
    homotopy classes of functors realize(A) -> realize(B) with
    |Ext(A0, B1)| * |TYPES(A, B)|, and check that every realizable (f0, f1)
    carries exactly |Ext(A0, B1)| classes.
    """

    def __init__(self, check_name: str = "ses1", catalog: Optional[Sequence[TypeObj]] = None):
        super().__init__(check_name=check_name, catalog=catalog)

    def _run(self, context: Dict[str, Any]) -> Dict[str, Any]:
        models = [realize(a) for a in self.catalog]
        rows: List[Dict[str, Any]] = []
        first_failure = None
        for (a, s1), (b, s2) in product(list(zip(self.catalog, models)), repeat=2):
            classes = homotopy_classes(s1, s2)
            predicted = pi0_hom_predicted(s1, s2)
            ext = ext_group(a.a0, b.a1).order()
            sizes = sorted({n for _, n in classes.fibers})
            ok = (
                classes.count == predicted
                and len(classes.fibers) == predicted // ext
                and sizes in ([], [ext])
            )
            row = {
                "source": str(a),
                "target": str(b),
                "predicted": predicted,
                "brute_force": classes.count,
                "ext": ext,
                "fiber_sizes": sizes,
                "ok": ok,
            }
            rows.append(row)
            if not ok and first_failure is None:
                self.logger.error(f"exact sequence count fails for {a} -> {b}")
                first_failure = row
        self.logger.info(f"audited {len(rows)} pairs")
        return {
            "passed": first_failure is None,
            "pairs": len(rows),
            "rows": rows,
            "counterexample": first_failure,
        }


class HomotopyGroupCheck(BaseCheck):
    """
    For every ordered pair of realized catalog types, compare the brute-force
    count of additive self-homotopies with |hom(A0, B1)|.
    """

    def __init__(self, check_name: str = "pi1", catalog: Optional[Sequence[TypeObj]] = None):
        super().__init__(check_name=check_name, catalog=catalog)

    def _run(self, context: Dict[str, Any]) -> Dict[str, Any]:
        models = [realize(a) for a in self.catalog]
        rows = []
        first_failure = None
        for (a, s1), (b, s2) in product(list(zip(self.catalog, models)), repeat=2):
            predicted = pi1_hom(s1, s2)
            count = count_additive_homotopies(s1, s2)
            row = {
                "source": str(a),
                "target": str(b),
                "predicted": str(predicted),
                "brute_force": count,
                "ok": count == predicted.order(),
            }
            rows.append(row)
            if not row["ok"] and first_failure is None:
                first_failure = row
        return {
            "passed": first_failure is None,
            "pairs": len(rows),
            "rows": rows,
            "counterexample": first_failure,
        }
