"""
Shared fixtures: every test runs with result re-verification switched on and
with settings re-read from the environment.
"""

import pytest

from algebra.config import get_settings
from algebra.types_cat import make_type_from_matrix
from models.abelian import AbGroup


@pytest.fixture(autouse=True)
def strict_settings(monkeypatch):
    """Re-verify every lift, extension and composite during tests."""
    monkeypatch.setenv("PICARDKIT_CHECK_RESULTS", "1")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def z2():
    return AbGroup.cyclic(2)


@pytest.fixture
def z4():
    return AbGroup.cyclic(4)


@pytest.fixture
def v4():
    """The Klein four-group Z/2 + Z/2."""
    return AbGroup(torsion=(2, 2))


@pytest.fixture
def small_types(z2, z4, v4):
    """A handful of types with nontrivial alpha."""
    return [
        make_type_from_matrix(z2, z2, [[1]]),
        make_type_from_matrix(z4, z2, [[1]]),
        make_type_from_matrix(z2, z4, [[1]]),
        make_type_from_matrix(v4, v4, [[1, 0], [0, 1]]),
        make_type_from_matrix(v4, z2, [[1, 1]]),
    ]
