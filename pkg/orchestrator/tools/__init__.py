"""
Tools package for picardkit.

This package contains the core Tool class and the tool implementations for
loading input documents and rendering reports.
"""

from typing import Dict
from .core_tool import Tool, ToolKind
from .document_loader import DocumentError, DocumentLoaderTool
from .report_renderer import ReportRendererTool

# Registry of all available tools, instantiated once at import time.
# Tools are stateless and are shared by the CLI and the verify orchestrator.
TOOL_REGISTRY: Dict[str, Tool] = {
    'document_loader': DocumentLoaderTool(),
    'report_renderer': ReportRendererTool(),
}

__all__ = ['TOOL_REGISTRY', 'Tool', 'ToolKind', 'DocumentError']
