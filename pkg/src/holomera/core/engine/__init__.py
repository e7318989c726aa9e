from __future__ import annotations

from .api import (
    effective_hamiltonian,
    excitation_energy,
    expectation,
    get_engine,
    ground_energy,
    ground_energy_ascending,
    interaction_energy,
    two_point,
)
from .support import ascend_to_core, core_expectation
from .windows import WindowEngine, WindowState

__all__ = [
    "WindowEngine",
    "WindowState",
    "ascend_to_core",
    "core_expectation",
    "effective_hamiltonian",
    "excitation_energy",
    "expectation",
    "get_engine",
    "ground_energy",
    "ground_energy_ascending",
    "interaction_energy",
    "two_point",
]
