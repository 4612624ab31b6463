"""
Core Tool class for picardkit checks and the command line.

This module defines the abstract base class for the tools the verification
orchestrator and the CLI share: loading input documents and rendering
reports.
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Dict, List


class ToolKind(str, Enum):
    """What a tool is used for."""
    LOADING = "loading"
    RENDERING = "rendering"


class Tool(ABC):
    """
    Abstract base class for all tools in picardkit.

    Attributes:
        name (str): Unique identifier for the tool
        description (str): Human-readable description of the tool's purpose
        required_kwargs (List[str]): List of required keyword arguments
        tool_kind (ToolKind): What the tool is used for
        version (str): Version of the tool implementation
    """

    def __init__(
        self,
        name: str,
        description: str,
        required_kwargs: List[str],
        tool_kind: ToolKind,
        version: str = "1.0.0"
    ) -> None:
        self.name = name
        self.description = description
        self.required_kwargs = required_kwargs
        self.tool_kind = tool_kind
        self.version = version

    def validate_kwargs(self, **kwargs) -> None:
        """
        Validate that all required keyword arguments are present.

        Raises:
            ValueError: If any required kwargs are missing
        """
        missing_kwargs = [kw for kw in self.required_kwargs if kw not in kwargs]
        if missing_kwargs:
            raise ValueError(f"Missing required arguments: {', '.join(missing_kwargs)}")

    @abstractmethod
    def run(self, **kwargs) -> Dict[str, Any]:
        """
        Execute the tool's main functionality.

        Args:
            **kwargs: Tool-specific arguments

        Returns:
            Dict[str, Any]: Tool execution results

        Raises:
            NotImplementedError: Must be implemented by concrete tool classes
            ValueError: If required kwargs are missing
        """
        self.validate_kwargs(**kwargs)
        raise NotImplementedError("Tool.run() must be implemented by concrete tool classes")

    def __str__(self) -> str:
        """Return a string representation of the tool."""
        return f"{self.name} (v{self.version}) - {self.description}"

    def __repr__(self) -> str:
        return f"Tool<name={self.name},v{self.version}>"
