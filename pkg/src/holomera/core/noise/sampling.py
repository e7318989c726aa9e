from __future__ import annotations

"""
Noisy Network Realizations.

Every gate location of the circuit receives its own noise draw. Draws come
from counter-based Philox streams keyed by the master seed with the counter
set to ``(0, layer, gate kind, sample)``, so realization ``i`` is identical
whatever order or thread it is generated in.
"""

import logging

import numpy as np

from holomera.core.network.mera import LayerGates, MeraNetwork
from holomera.core.noise.channels import (
    NoiseModel,
    control_angles,
    control_rotations,
    dephasing_patterns,
    sample_dephasing_branches,
)

logger = logging.getLogger(__name__)

_KIND_CODES = {"w": 1, "u": 2}


def location_stream(seed: int, layer: int, kind: str, sample: int) -> np.random.Generator:
    """Independent stream for one (layer, gate kind, sample) triple; rows index positions."""
    bitgen = np.random.Philox(key=seed, counter=[0, layer, _KIND_CODES[kind], sample])
    return np.random.Generator(bitgen)


def noisy_layer_gates(gates: np.ndarray, noise: NoiseModel, rng: np.random.Generator) -> np.ndarray:
    """Perturb a stack of ``(n, 2, 2, 2, 2)`` gates, one draw per position."""
    n = gates.shape[0]
    mats = np.ascontiguousarray(gates).reshape(n, 4, 4)
    if noise.kind == "control":
        perturb = control_rotations(control_angles(rng, noise.eps, n, noise.centered))
    else:
        perturb = dephasing_patterns()[sample_dephasing_branches(rng, noise.eps, n)]
    return np.einsum("nij,njk->nik", mats, perturb).reshape(n, 2, 2, 2, 2)


def noisy_network(net: MeraNetwork, noise: NoiseModel, sample_index: int) -> MeraNetwork:
    """
    One pure-state realization of the noisy circuit.

    The core is kept at its ideal value; every isometry and disentangler of
    every layer is replaced by an independent draw.

    Args:
        net: Ideal network.
        noise: Noise model.
        sample_index: Realization index.

    Returns:
        MeraNetwork: Network with per-location gate overrides (``net`` itself when ideal).
    """
    if noise.is_ideal:
        return net
    overrides = {}
    for rho in net.layers:
        layer = net.layer(rho)
        w = noisy_layer_gates(layer.w, noise, location_stream(noise.seed, rho, "w", sample_index))
        u = noisy_layer_gates(layer.u, noise, location_stream(noise.seed, rho, "u", sample_index))
        overrides[rho] = LayerGates(w=w, u=u)
    logger.debug(f"Sampled noisy realization {sample_index} ({noise.tag}) for D={net.depth}")
    return net.with_overrides(overrides)
