"""
JSON document loader for picardkit.

Reads a JSON file, validates it as one of the record kinds in
models.records, and builds the algebra value it describes.
"""

import json
import logging
from typing import Any, Dict

from pydantic import ValidationError

from algebra.errors import IllDefinedHom, InvalidElement
from models.records import parse_record
from .core_tool import Tool, ToolKind

logger = logging.getLogger(__name__)


class DocumentError(RuntimeError):
    """An input document could not be read or does not fit any record kind."""


class DocumentLoaderTool(Tool):
    """
    Tool for loading groups, types, morphisms, models and catalogs from JSON.

    Malformed shapes such as a matrix of the wrong size or a non-prime
    Pruefer key are input errors. Algebraic
    verdicts on well-formed input (a non-commuting square, a structure map
    that does not fit its groups) propagate unchanged.
    """

    def __init__(self) -> None:
        super().__init__(
            name="document_loader",
            description="Load algebra records from JSON documents",
            required_kwargs=["file_path"],
            tool_kind=ToolKind.LOADING,
            version="1.0.0"
        )

    def run(self, **kwargs) -> Dict[str, Any]:
        """
        Load one document.

        Args:
            file_path: Path to the JSON file
            expect: Optional record kind the document must have

        Returns:
            Dict containing the record kind, the validated record and the value:
            {"kind": "type", "record": TypeRecord(...), "value": TypeObj(...)}

        Raises:
            ValueError: If file_path is missing
            DocumentError: If the file cannot be read, is not JSON, does not
                validate as the expected kind or describes a malformed value
        """
        self.validate_kwargs(**kwargs)
        file_path = kwargs["file_path"]
        expect = kwargs.get("expect")

        try:
            with open(file_path, "r", encoding="utf-8") as handle:
                data = json.load(handle)
            record = parse_record(data)
            value = record.to_value()
        except (OSError, json.JSONDecodeError, ValidationError, ValueError, InvalidElement, IllDefinedHom) as e:
            logger.error(f"Failed to load {file_path}: {str(e)}")
            raise DocumentError(f"Failed to load {file_path}: {str(e)}") from e

        if expect and record.kind not in (expect if isinstance(expect, tuple) else (expect,)):
            raise DocumentError(f"{file_path} holds a {record.kind} record, expected {expect}")
        logger.info(f"Loaded {record.kind} record from {file_path}")
        return {"kind": record.kind, "record": record, "value": value}
