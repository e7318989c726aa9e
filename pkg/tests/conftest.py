from __future__ import annotations

"""
Global Pytest Configuration and Fixtures.

This module sets up the testing environment, including:
1. Path manipulation to ensure the 'src' directory is importable.
2. Shared fixtures: the analytic gate set, small networks and a config dict.
"""

import os
import sys
from typing import Any, Dict

import pytest

# -----------------------------------------------------------------------------
# Path Configuration
# -----------------------------------------------------------------------------
_SRC_PATH = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src"))
if _SRC_PATH not in sys.path:
    sys.path.insert(0, _SRC_PATH)

from holomera.core.network.core_state import build_network  # noqa: E402
from holomera.core.network.gates import GateSet, analytic_gates  # noqa: E402
from holomera.core.network.mera import MeraNetwork  # noqa: E402


# -----------------------------------------------------------------------------
# Shared Fixtures
# -----------------------------------------------------------------------------
@pytest.fixture(scope="session")
def gates() -> GateSet:
    """Closed-form wavelet gates."""
    return analytic_gates()


@pytest.fixture(scope="session")
def net3() -> MeraNetwork:
    """Canonical-gauge network with D=3 (N=8 sites)."""
    return build_network(3)


@pytest.fixture(scope="session")
def net4() -> MeraNetwork:
    """Canonical-gauge network with D=4 (N=16 sites)."""
    return build_network(4)


@pytest.fixture
def default_config(tmp_path: Any) -> Dict[str, Any]:
    """
    Return a small, valid experiment configuration writing into a temp dir.

    Returns:
        Dict[str, Any]: Raw configuration overrides for the validator.
    """
    return {
        "depth": 4,
        "seed": 0,
        "threads": 1,
        "output_dir": str(tmp_path),
        "output_prefix": "test",
        "cache_dir": str(tmp_path / "cache"),
    }
