"""
Unit tests for the ReportRendererTool.
"""

import json

import pytest

from orchestrator.tools.core_tool import ToolKind
from orchestrator.tools.report_renderer import ReportRendererTool

REPORT = {"passed": True, "checked": 27, "notes": {"pentagon": "trivial associator"}, "window": None}


def test_initialization():
    """Test tool initialization."""
    tool = ReportRendererTool()
    assert tool.name == "report_renderer"
    assert tool.tool_kind == ToolKind.RENDERING
    assert str(tool) == "report_renderer (v1.0.0) - Render reports as sorted JSON or plain text"


def test_structured_is_sorted_json():
    """Test that structured output parses back and does not depend on key order."""
    tool = ReportRendererTool()
    text = tool.run(report=REPORT)["text"]
    assert json.loads(text) == REPORT
    reordered = dict(reversed(list(REPORT.items())))
    assert tool.run(report=reordered, format="structured")["text"] == text
    assert text.index('"checked"') < text.index('"window"')


def test_plain_listing():
    """Test the plain key/value listing."""
    text = ReportRendererTool().run(report=REPORT, format="plain")["text"]
    lines = text.splitlines()
    assert lines[0] == "checked: 27"
    assert "notes:" in lines
    assert '  pentagon: "trivial associator"' in lines
    assert "window: null" in lines


def test_plain_nested_lists():
    """Test that lists of scalars stay on one line and lists of objects are itemised."""
    report = {"invariants": [2, 4], "items": [{"a": 1}, {"a": 2}]}
    lines = ReportRendererTool().run(report=report, format="plain")["text"].splitlines()
    assert lines == ["invariants:", "  [2, 4]", "items:", "  -", "    a: 1", "  -", "    a: 2"]


def test_unknown_format():
    """Test that an unknown format is rejected."""
    with pytest.raises(ValueError):
        ReportRendererTool().run(report=REPORT, format="yaml")


def test_missing_report():
    """Test that a missing report is rejected."""
    with pytest.raises(ValueError):
        ReportRendererTool().run(format="plain")
