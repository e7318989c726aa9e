from __future__ import annotations

"""
Expectation Engine Facade.

Entry points for energies and expectation values of MERA states with bulk
hologron insertions. One cached :class:`WindowEngine` is kept per network so
that ground-state windows are shared across all configurations of a sweep.
"""

import logging
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from holomera.core.engine.support import ascend_to_core, core_expectation
from holomera.core.engine.windows import Region, WindowEngine
from holomera.core.lattice.hamiltonian import ChainHamiltonian
from holomera.core.network.mera import BulkCoordinate, MeraNetwork, validate_flips
from holomera.core.tensor import LocalOperator, is_hermitian, operator_matrix, operator_tensor
from holomera.domain import constants as const
from holomera.domain.errors import (
    CapacityError,
    ConfigError,
    NonHermitianError,
    NumericalCheckError,
    SiteIndexError,
)

logger = logging.getLogger(__name__)

Observable = Union[LocalOperator, ChainHamiltonian]


@lru_cache(maxsize=16)
def get_engine(net: MeraNetwork) -> WindowEngine:
    """Shared window engine of a network (networks hash by identity)."""
    return WindowEngine(net)


# -----------------------------------------------------------------------------
# ENERGIES
# -----------------------------------------------------------------------------

def ground_energy(net: MeraNetwork) -> float:
    """``E_GS = N/(4 pi) sum_s <h_s>`` by window descent."""
    return get_engine(net).ground_energy()


def ground_energy_ascending(net: MeraNetwork) -> float:
    """``<psi_core| H_eff |psi_core>``: the ascension route to the same energy."""
    h_eff = get_engine(net).effective_hamiltonian()
    psi = net.core.reshape(-1)
    return float(np.vdot(psi, h_eff @ psi).real)


def excitation_energy(
        net: MeraNetwork,
        flips: Sequence[BulkCoordinate],
        region: Region = "cone",
) -> float:
    """Energy above the ground state of the state with the given hologrons."""
    return get_engine(net).excitation_energy(flips, region)


def interaction_energy(net: MeraNetwork, x1: BulkCoordinate, x2: BulkCoordinate) -> float:
    return get_engine(net).interaction_energy(x1, x2)


def effective_hamiltonian(net: MeraNetwork) -> np.ndarray:
    return get_engine(net).effective_hamiltonian()


# -----------------------------------------------------------------------------
# EXPECTATIONS
# -----------------------------------------------------------------------------

def expectation(
        net: MeraNetwork,
        flips: Sequence[BulkCoordinate],
        obs: Observable,
) -> float:
    """
    Exact ``<Psi_flips| obs |Psi_flips>``.

    Args:
        net: Network.
        flips: Distinct bulk insertions.
        obs: Hermitian boundary operator (at most six sites), or the full
            chain Hamiltonian.

    Returns:
        float: The real expectation value.

    Raises:
        DuplicateInsertionError: Repeated insertion coordinate.
        NonHermitianError: ``obs`` is not Hermitian.
        CapacityError: Operator support too large.
    """
    flips = validate_flips(flips, net.depth)
    if isinstance(obs, ChainHamiltonian):
        if obs.n_sites != net.n_sites:
            raise ConfigError(f"Hamiltonian on {obs.n_sites} sites, network has {net.n_sites}")
        base = ground_energy(net)
        return base + excitation_energy(net, flips) if flips else base

    _check_observable(obs, net.n_sites)
    pulled = ascend_to_core(net, obs, flips)
    value = core_expectation(net.core, pulled)
    scale = max(1.0, abs(value.real))
    if abs(value.imag) > const.IMAG_RESIDUE_TOL * scale:
        raise NumericalCheckError(f"Imaginary residue {value.imag:.3e} in expectation value")
    return value.real


def two_point(
        net: MeraNetwork,
        op_a: np.ndarray,
        op_b: np.ndarray,
        r: int,
        site: int = 0,
        flips: Sequence[BulkCoordinate] = (),
) -> float:
    """
    Connected correlator ``<A_site B_{site+r}> - <A><B>``.

    Args:
        net: Network.
        op_a: Contiguous operator tensor (1 or 3 sites).
        op_b: Contiguous operator tensor.
        r: Separation between the first sites of A and B.
        site: Position of A.
        flips: Optional hologron insertions.

    Raises:
        ConfigError: If the supports overlap.
    """
    n = net.n_sites
    ka, kb = np.asarray(op_a).ndim // 2, np.asarray(op_b).ndim // 2
    if r < ka or r + kb > n:
        raise ConfigError(f"Separation r={r} overlaps the supports on N={n}")
    a = LocalOperator(tuple((site + d) % n for d in range(ka)), np.asarray(op_a))
    b = LocalOperator(tuple((site + r + d) % n for d in range(kb)), np.asarray(op_b))
    joint = LocalOperator(
        a.sites + b.sites,
        operator_tensor(np.kron(operator_matrix(a.tensor), operator_matrix(b.tensor))),
    )
    return expectation(net, flips, joint) - expectation(net, flips, a) * expectation(net, flips, b)


def _check_observable(obs: LocalOperator, n_sites: int) -> None:
    if obs.n_sites > const.MAX_BOUNDARY_OPERATOR_SITES:
        raise CapacityError(f"Observable on {obs.n_sites} sites exceeds the supported support")
    if any(not (0 <= x < n_sites) for x in obs.sites):
        raise SiteIndexError(f"Observable sites {obs.sites} outside [0, {n_sites})")
    if not is_hermitian(obs.tensor):
        raise NonHermitianError("Observable is not Hermitian")
