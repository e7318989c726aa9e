from __future__ import annotations

"""
Dense Statevector Oracle.

Materializes the full boundary state of small networks (N <= 16) by
applying every isometry and disentangler in turn. It is the reference
against which the cone-restricted engine is checked.
"""

from typing import Sequence

import numpy as np
import numpy.typing as npt

from holomera.core.lattice.exact import build_dense
from holomera.core.network.mera import BulkCoordinate, MeraNetwork, flips_by_layer, validate_flips
from holomera.core.tensor import apply_operator, to_little_endian
from holomera.domain import constants as const
from holomera.domain.errors import CapacityError


def boundary_state(net: MeraNetwork, flips: Sequence[BulkCoordinate] = ()) -> npt.NDArray[np.complex128]:
    """
    Boundary state tensor of shape ``(2,)*N``.

    Raises:
        CapacityError: If ``N`` exceeds the dense limit.
    """
    if net.n_sites > const.MAX_DENSE_SITES:
        raise CapacityError(f"Dense boundary state limited to {const.MAX_DENSE_SITES} sites")
    by_layer = flips_by_layer(validate_flips(flips, net.depth))

    psi = np.asarray(net.core, dtype=np.complex128)
    for rho in net.layers:
        layer = net.layer(rho)
        n = 2 ** rho
        flipped = by_layer.get(rho, frozenset())
        operands: list = [psi, list(range(n))]
        for j in range(n):
            iso = layer.w[j, :, :, :, 1 if j in flipped else 0]
            operands += [iso, [n + 2 * j, n + 2 * j + 1, j]]
        psi = np.einsum(*operands, list(range(n, 3 * n)), optimize=True)
        for p in range(n):
            psi = apply_operator(psi, layer.u[p], [2 * p + 1, (2 * p + 2) % (2 * n)])
    return psi


def boundary_vector(net: MeraNetwork, flips: Sequence[BulkCoordinate] = ()) -> npt.NDArray[np.complex128]:
    """Little-endian boundary state vector."""
    return to_little_endian(boundary_state(net, flips))


def dense_energy(net: MeraNetwork, flips: Sequence[BulkCoordinate] = ()) -> float:
    """``<Psi| H |Psi>`` from the dense state and sparse Hamiltonian."""
    vec = boundary_vector(net, flips)
    h = build_dense(net.n_sites)
    return float(np.vdot(vec, h @ vec).real)
