"""
Unit tests for the DocumentLoaderTool.
"""

import json

import pytest

from algebra.errors import SquareDoesNotCommute
from algebra.picard import hbar
from algebra.types_cat import l_of
from models.abelian import AbGroup
from orchestrator.tools import TOOL_REGISTRY, DocumentError
from orchestrator.tools.core_tool import ToolKind
from orchestrator.tools.document_loader import DocumentLoaderTool


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document into the test directory and return its path."""
    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return _write


def test_initialization():
    """Test tool initialization."""
    tool = DocumentLoaderTool()
    assert tool.name == "document_loader"
    assert tool.required_kwargs == ["file_path"]
    assert tool.tool_kind == ToolKind.LOADING
    assert tool.version == "1.0.0"
    assert isinstance(TOOL_REGISTRY["document_loader"], DocumentLoaderTool)


def test_load_group(write_json):
    """Test loading a group from a presentation."""
    path = write_json("z6.json", {"generators": 1, "relations": [[6]]})
    result = DocumentLoaderTool().run(file_path=path)
    assert result["kind"] == "group"
    assert result["value"] == AbGroup.cyclic(6)
    assert result["record"].generators == 1


def test_load_type_and_model(write_json):
    """Test loading a type and a builtin model."""
    z = AbGroup.free(1)
    path = write_json("lz.json", l_of(z).to_dict())
    assert DocumentLoaderTool().run(file_path=path, expect="type")["value"] == l_of(z)

    path = write_json("hbar.json", {"builtin": "hbar"})
    result = DocumentLoaderTool().run(file_path=path, expect=("model", "type"))
    assert result["value"] == hbar()


def test_missing_file_path():
    """Test that a missing file_path is rejected."""
    with pytest.raises(ValueError):
        DocumentLoaderTool().run()


def test_missing_file(tmp_path):
    """Test that an unreadable file raises DocumentError."""
    with pytest.raises(DocumentError):
        DocumentLoaderTool().run(file_path=str(tmp_path / "nonexistent.json"))


def test_invalid_json(tmp_path):
    """Test that a file that is not JSON raises DocumentError."""
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(DocumentError):
        DocumentLoaderTool().run(file_path=str(path))


@pytest.mark.parametrize("data", [
    [1, 2, 3],
    {"kind": "sheaf"},
    {"rank": 1, "torsion": [2], "generators": 1},
    {"builtin": "other"},
    {"kind": ["group"]},
    {"pruefer": {"4": 1}},
    {"generators": 2, "relations": [[1]]},
])
def test_invalid_documents(write_json, data):
    """Test that documents which fit no record kind or hold malformed shapes raise DocumentError."""
    path = write_json("bad.json", data)
    with pytest.raises(DocumentError):
        DocumentLoaderTool().run(file_path=path)


def test_unexpected_kind(write_json):
    """Test that the expect argument is enforced."""
    path = write_json("group.json", {"rank": 1})
    with pytest.raises(DocumentError, match="expected type"):
        DocumentLoaderTool().run(file_path=path, expect="type")


def test_algebra_errors_propagate(write_json):
    """Test that a non-commuting square is reported as an algebra error."""
    z2 = AbGroup.cyclic(2).to_dict()
    r_z2 = {"a0": z2, "a1": z2, "alpha": [[1]]}
    path = write_json("square.json", {"source": r_z2, "target": r_z2, "f0": [[1]], "f1": [[0]]})
    with pytest.raises(SquareDoesNotCommute):
        DocumentLoaderTool().run(file_path=path)
