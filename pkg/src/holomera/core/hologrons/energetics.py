from __future__ import annotations

"""
Hologron Energetics.

Excitation energies of one and two flipped isometry ancillas, measured in
Hamiltonian units (prefactor N/4pi included) relative to the ground state.
"""

import logging
from typing import Dict, List, Sequence

from holomera.core.engine import excitation_energy, interaction_energy
from holomera.core.network.mera import BulkCoordinate, MeraNetwork, validate_flips
from holomera.core.parallel import parallel_map
from holomera.domain.errors import DuplicateInsertionError

logger = logging.getLogger(__name__)


def single_energy(net: MeraNetwork, x: BulkCoordinate) -> float:
    """``E_1h(x) = <X_x H X_x> - E_GS``."""
    validate_flips((x,), net.depth)
    return excitation_energy(net, (x,))


def pair_energy(net: MeraNetwork, x1: BulkCoordinate, x2: BulkCoordinate) -> float:
    """
    ``E_2h(x1, x2) = <X_x1 X_x2 H X_x1 X_x2> - E_GS``; symmetric in its arguments.

    Raises:
        DuplicateInsertionError: If ``x1 == x2``.
    """
    if x1 == x2:
        raise DuplicateInsertionError(f"Both hologrons inserted at {x1}")
    flips = tuple(sorted(validate_flips((x1, x2), net.depth)))
    return excitation_energy(net, flips)


def pair_interaction(net: MeraNetwork, x1: BulkCoordinate, x2: BulkCoordinate) -> float:
    """``V = E_2h - E_1h(x1) - E_1h(x2)``, exactly zero when the cones are disjoint."""
    if x1 == x2:
        raise DuplicateInsertionError(f"Both hologrons inserted at {x1}")
    a, b = sorted((x1, x2))
    return interaction_energy(net, a, b)


def single_energies(
        net: MeraNetwork,
        coords: Sequence[BulkCoordinate],
        threads: int = 1,
) -> Dict[BulkCoordinate, float]:
    """Single-hologron energies of several coordinates, computed in parallel."""
    unique = sorted(set(coords))
    values = parallel_map(lambda x: single_energy(net, x), unique, threads=threads, label="Hologron1")
    return dict(zip(unique, values))


def radial_profile(net: MeraNetwork, s0: int = 0, rho0: int = 2, threads: int = 1) -> List[Dict[str, float]]:
    """
    ``E_1h`` along the radial lineage through ``(rho0, s0)``, out to ``rho = D-1``.

    Returns:
        List[Dict[str, float]]: Rows with ``rho``, ``s`` and ``energy``.
    """
    base = BulkCoordinate(rho0, s0).validate(net.depth)
    coords = [base.child(r - rho0) for r in range(rho0, net.depth)]
    energies = single_energies(net, coords, threads)
    rows = [{"rho": x.rho, "s": x.s, "energy": energies[x]} for x in coords]
    logger.info(f"Single-hologron profile on D={net.depth}: {len(rows)} radii")
    return rows


def angular_spread(net: MeraNetwork, rho: int, threads: int = 1) -> float:
    """
    ``max_s E_1h / min_s E_1h`` at fixed radius.

    The energy is translation invariant up to the period of the core, so the
    ratio stays close to one.
    """
    coords = [BulkCoordinate(rho, s) for s in range(2 ** rho)]
    values = list(single_energies(net, coords, threads).values())
    return max(values) / min(values)
