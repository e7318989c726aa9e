from __future__ import annotations

from .channels import (
    DEPHASING_BRANCHES,
    NOISE_KINDS,
    KrausSet,
    NoiseModel,
    control_error_fidelity,
    dephasing_fidelity_closed_form,
    dephasing_fidelity_monte_carlo,
    dephasing_kraus,
    dephasing_weights,
    gate_fidelity,
    pauli_generators,
    sample_control_gate,
    sample_dephasing_gate,
)
from .potential import NoisyPoint, NoisyPotential, noisy_potential, sample_pair_energies
from .sampling import location_stream, noisy_layer_gates, noisy_network

__all__ = [
    "DEPHASING_BRANCHES",
    "KrausSet",
    "NOISE_KINDS",
    "NoiseModel",
    "NoisyPoint",
    "NoisyPotential",
    "control_error_fidelity",
    "dephasing_fidelity_closed_form",
    "dephasing_fidelity_monte_carlo",
    "dephasing_kraus",
    "dephasing_weights",
    "gate_fidelity",
    "location_stream",
    "noisy_layer_gates",
    "noisy_network",
    "noisy_potential",
    "pauli_generators",
    "sample_control_gate",
    "sample_dephasing_gate",
    "sample_pair_energies",
]
