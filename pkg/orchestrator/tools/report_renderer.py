"""
Report rendering tool for picardkit.

Structured output is JSON with sorted keys, so identical reports render to
identical bytes. Plain output is an indented key/value listing for reading.
"""

import json
from typing import Any, Dict, List

from .core_tool import Tool, ToolKind

FORMATS = ("structured", "plain")


def _plain_lines(value: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_plain_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(item)}")
        return lines
    if isinstance(value, list):
        if all(not isinstance(item, (dict, list)) or not item for item in value):
            return [f"{pad}{json.dumps(value)}"]
        lines = []
        for item in value:
            lines.append(f"{pad}-")
            lines.extend(_plain_lines(item, indent + 1))
        return lines
    return [f"{pad}{json.dumps(value)}"]


class ReportRendererTool(Tool):
    """Tool for turning report dictionaries into text."""

    def __init__(self) -> None:
        super().__init__(
            name="report_renderer",
            description="Render reports as sorted JSON or plain text",
            required_kwargs=["report"],
            tool_kind=ToolKind.RENDERING,
            version="1.0.0"
        )

    def run(self, **kwargs) -> Dict[str, Any]:
        """
        Render a report.

        Args:
            report: JSON-compatible report
            format: "structured" (default) or "plain"

        Returns:
            Dict containing the rendered text: {"text": "..."}

        Raises:
            ValueError: If report is missing or the format is unknown
        """
        self.validate_kwargs(**kwargs)
        report = kwargs["report"]
        fmt = kwargs.get("format", "structured")
        if fmt not in FORMATS:
            raise ValueError(f"Unknown format '{fmt}', expected one of {', '.join(FORMATS)}")
        if fmt == "structured":
            return {"text": json.dumps(report, sort_keys=True, indent=2)}
        return {"text": "\n".join(_plain_lines(report))}
