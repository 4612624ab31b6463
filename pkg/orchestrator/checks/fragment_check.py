# fragment_check.py
# Exhaustive projectivity / injectivity of a single object over the catalog

from typing import Any, Dict, Optional, Sequence

from algebra.fragment import check_injective_in_fragment, check_projective_in_fragment
from orchestrator.base_check import BaseCheck
from models.types import TypeObj


class ProjectiveCheck(BaseCheck):
    """Every morphism P -> B lifts along every es A -> B inside the catalog."""

    def __init__(self, check_name: str = "projective", catalog: Optional[Sequence[TypeObj]] = None):
        super().__init__(check_name=check_name, catalog=catalog)

    def _run(self, context: Dict[str, Any]) -> Dict[str, Any]:
        p = context["type"]
        report = check_projective_in_fragment(p, self.catalog)
        return {"object": p.to_dict(), **report.to_dict()}


class InjectiveCheck(BaseCheck):
    """Every morphism A -> r(I) extends along every faithful A -> B inside the catalog."""

    def __init__(self, check_name: str = "injective", catalog: Optional[Sequence[TypeObj]] = None):
        super().__init__(check_name=check_name, catalog=catalog)

    def _run(self, context: Dict[str, Any]) -> Dict[str, Any]:
        target = context["target"]
        report = check_injective_in_fragment(target, self.catalog)
        return {"object": target.to_dict(), **report.to_dict()}
