from __future__ import annotations

from .exact import EdResult, build_dense, ed_energy_density, ed_ground, sector_projector
from .hamiltonian import (
    PAULI,
    ChainHamiltonian,
    LocalTerm,
    continuity_residual,
    energy_density_tensor,
    epsilon_proxy,
    local_term,
    momentum_density,
    pauli_string,
    prefactor,
    sigma_proxy,
)

__all__ = [
    "PAULI",
    "ChainHamiltonian",
    "EdResult",
    "LocalTerm",
    "build_dense",
    "continuity_residual",
    "ed_energy_density",
    "ed_ground",
    "energy_density_tensor",
    "epsilon_proxy",
    "local_term",
    "momentum_density",
    "pauli_string",
    "prefactor",
    "sector_projector",
    "sigma_proxy",
]
