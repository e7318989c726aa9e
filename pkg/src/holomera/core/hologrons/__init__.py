from __future__ import annotations

from .energetics import (
    angular_spread,
    pair_energy,
    pair_interaction,
    radial_profile,
    single_energies,
    single_energy,
)
from .gauges import GaugeSweep, gauge_sweep
from .potentials import (
    ANGULAR,
    RADIAL,
    PotentialCurve,
    PotentialPoint,
    angular_potential,
    collapse,
    collapse_family,
    is_monotone,
    radial_pairs,
    radial_potential,
)

__all__ = [
    "ANGULAR",
    "GaugeSweep",
    "PotentialCurve",
    "PotentialPoint",
    "RADIAL",
    "angular_potential",
    "angular_spread",
    "collapse",
    "collapse_family",
    "gauge_sweep",
    "is_monotone",
    "pair_energy",
    "pair_interaction",
    "radial_pairs",
    "radial_potential",
    "radial_profile",
    "single_energies",
    "single_energy",
]
