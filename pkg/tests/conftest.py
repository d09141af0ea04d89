"""
Shared fixtures for the Copolarity-Verify test suite.
"""

import os
import sys

# Add project root so "copolarity" can be imported when pytest runs from anywhere
_tests_dir = os.path.dirname(os.path.abspath(__file__))
_project_root = os.path.dirname(_tests_dir)
if _project_root not in sys.path:
    sys.path.insert(0, _project_root)

import pytest

from copolarity.cases import ScanBounds
from copolarity.config import reset_config


@pytest.fixture(autouse=True)
def fresh_config():
    """Every test starts from a freshly loaded global configuration."""
    reset_config()
    yield
    reset_config()


@pytest.fixture
def default_bounds() -> ScanBounds:
    return ScanBounds()


@pytest.fixture
def small_bounds() -> ScanBounds:
    """Scan ranges small enough for quick runs and still large enough to certify every tail."""
    return ScanBounds(max_highest_weight=12, max_tensor_dim=12, max_irrep_weight=10,
                      diophantine_bound=1000, involution_check_dim=4)
