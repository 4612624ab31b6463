# verify_orchestrator.py
# Coordinates the verification checks and the tools that load inputs and render reports

import logging
from typing import Any, Dict, Optional, Sequence

from orchestrator.checks import (
    AdjunctionCheck,
    CoherenceCheck,
    EnvelopeCheck,
    ExactSequenceCheck,
    HomotopyGroupCheck,
    InjectiveCheck,
    ProjectiveCheck,
)
from orchestrator.tools import TOOL_REGISTRY
from models.types import TypeObj

# Suites that need no per-object input; "verify all" runs these
CATALOG_SUITES = ("coherence", "adjunctions", "pi1", "envelopes", "ses1")


class VerifyOrchestrator:
    """
    Orchestrates the execution of verification checks over one catalog.
    Loads catalogs through the toolbox and handles error cases per check.
    """

    def __init__(self, catalog: Optional[Sequence[TypeObj]] = None, toolbox: Optional[Dict] = None):
        """
        Initialize the orchestrator.

        Args:
            catalog: Types to audit; None means the default catalog
            toolbox: Tools to use. Defaults to TOOL_REGISTRY.
        """
        self.logger = logging.getLogger(__name__)
        self.toolbox = toolbox or TOOL_REGISTRY
        self.checks = {
            'coherence': CoherenceCheck(catalog=catalog),
            'adjunctions': AdjunctionCheck(catalog=catalog),
            'pi1': HomotopyGroupCheck(catalog=catalog),
            'envelopes': EnvelopeCheck(catalog=catalog),
            'ses1': ExactSequenceCheck(catalog=catalog),
            'projective': ProjectiveCheck(catalog=catalog),
            'injective': InjectiveCheck(catalog=catalog),
        }

    @classmethod
    def from_catalog_file(cls, file_path: Optional[str], toolbox: Optional[Dict] = None) -> "VerifyOrchestrator":
        """
        Build an orchestrator for a catalog document, or for the default
        catalog when file_path is None or "default".
        """
        toolbox = toolbox or TOOL_REGISTRY
        if file_path in (None, "default"):
            return cls(toolbox=toolbox)
        loaded = toolbox['document_loader'].run(file_path=file_path, expect="catalog")
        return cls(catalog=loaded["value"], toolbox=toolbox)

    def run_check(self, name: str, context: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Run one check by name.

        Raises:
            KeyError: If no check has that name
        """
        if name not in self.checks:
            raise KeyError(f"Check '{name}' not found")
        self.logger.info(f"Running {name} check")
        return self.checks[name].execute(context)

    def run_all_checks(self) -> Dict[str, Any]:
        """
        Run every catalog suite.

        Returns:
            Dictionary containing the envelope of each suite
        """
        results = {}
        for name in CATALOG_SUITES:
            try:
                results[name] = self.run_check(name)
            except Exception as e:
                self.logger.error(f"Error running {name} check: {str(e)}")
                results[name] = {'status': 'error', 'output': None, 'error': {"message": str(e)}}
        return results
