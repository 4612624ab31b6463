# base_check.py
# Abstract base class for picardkit verification checks
# Each check runs one audit over a catalog of types and reports a pass flag plus details

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence

from algebra.errors import AlgebraError
from algebra.types_cat import DEFAULT_GROUPS, default_catalog
from models.abelian import AbGroup
from models.types import TypeObj


class BaseCheck(ABC):
    """
    Abstract base class for all verification checks.
    Defines the execute() envelope and the catalog handling shared by checks.
    """

    def __init__(self, check_name: str, catalog: Optional[Sequence[TypeObj]] = None):
        """
        Initialize the check.

        Args:
            check_name: Name of the check
            catalog: Types to audit; defaults to every type over 0, Z/2, Z/3, Z/4, Z/2+Z/2
        """
        self.check_name = check_name
        self.catalog: List[TypeObj] = list(catalog) if catalog is not None else default_catalog()
        self.logger = logging.getLogger(f"picardkit.{check_name}")

    def catalog_groups(self) -> List[AbGroup]:
        """The distinct groups occurring in the catalog, in order of appearance."""
        if not self.catalog:
            return list(DEFAULT_GROUPS)
        groups: List[AbGroup] = []
        for t in self.catalog:
            for g in (t.a0, t.a1):
                if g not in groups:
                    groups.append(g)
        return groups

    @abstractmethod
    def _run(self, context: Dict[str, Any]) -> Dict[str, Any]:
        """
        Run the audit. The returned dict must contain a boolean "passed".
        """
        pass

    def _validate_output(self, output: Any) -> bool:
        return isinstance(output, dict) and isinstance(output.get("passed"), bool)

    def execute(self, context: Optional[Dict[str, Any]] = None) -> dict:
        """
        Execute the check.

        Args:
            context: Check-specific inputs, e.g. the type under test

        Returns:
            dict: {"status": "success" | "failure" | "error", "output": ..., "error": ...}
        """
        try:
            self.logger.info(f"Running {self.check_name} on {len(self.catalog)} catalog types")
            output = self._run(context or {})
            if not self._validate_output(output):
                raise ValueError("Invalid output type")
            return {
                "status": "success" if output["passed"] else "failure",
                "output": output,
                "error": None
            }
        except (AlgebraError, ValueError, KeyError) as e:
            self.logger.error(f"Error executing {self.check_name}: {str(e)}")
            return {
                "status": "error",
                "output": None,
                "error": e.to_dict() if isinstance(e, AlgebraError) else {"message": str(e)}
            }
