# adjunction_check.py
# Hom-set bijections TYPES(l(M), A) = hom(M, A0) and TYPES(A, r(M)) = hom(A1, M)

from typing import Any, Dict, Optional, Sequence

from algebra.abelian import enumerate_homs
from algebra.types_cat import (
    adjoint_l,
    adjoint_r,
    coadjoint_l,
    coadjoint_r,
    enumerate_type_morphisms,
    l_of,
    r_of,
    square_defect,
)
from orchestrator.base_check import BaseCheck
from models.types import TypeObj


class AdjunctionCheck(BaseCheck):
    """
    For every group M occurring in the catalog and every catalog type A,
    compare hom-set sizes on both sides of each bijection and check that
    both round trips are the identity.
    """

    def __init__(self, check_name: str = "adjunctions", catalog: Optional[Sequence[TypeObj]] = None):
        super().__init__(check_name=check_name, catalog=catalog)

    def _check_l(self, m, a) -> bool:
        lm = l_of(m)
        morphisms = enumerate_type_morphisms(lm, a)
        homs = enumerate_homs(m, a.a0)
        if len(morphisms) != len(homs):
            return False
        for u in homs:
            f = adjoint_l(m, a, u)
            if square_defect(f.source, f.target, f.f0, f.f1) is not None or coadjoint_l(f) != u:
                return False
        return all(adjoint_l(m, a, coadjoint_l(f)).key == f.key for f in morphisms)

    def _check_r(self, m, a) -> bool:
        rm = r_of(m)
        morphisms = enumerate_type_morphisms(a, rm)
        homs = enumerate_homs(a.a1, m)
        if len(morphisms) != len(homs):
            return False
        for v in homs:
            f = adjoint_r(a, m, v)
            if square_defect(f.source, f.target, f.f0, f.f1) is not None or coadjoint_r(f) != v:
                return False
        return all(adjoint_r(a, m, coadjoint_r(f)).key == f.key for f in morphisms)

    def _run(self, context: Dict[str, Any]) -> Dict[str, Any]:
        tested = 0
        for m in self.catalog_groups():
            for a in self.catalog:
                tested += 1
                for side, ok in (("l", self._check_l(m, a)), ("r", self._check_r(m, a))):
                    if not ok:
                        self.logger.error(f"{side}-adjunction fails for M = {m}, A = {a}")
                        return {
                            "passed": False,
                            "tested": tested,
                            "counterexample": {"side": side, "group": m.to_dict(), "type": a.to_dict()},
                        }
        return {"passed": True, "tested": tested, "counterexample": None}
