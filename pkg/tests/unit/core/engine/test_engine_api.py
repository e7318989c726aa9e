from __future__ import annotations

"""
Unit tests for the Expectation Engine Facade.

Verifies:
1. Descent and ascension routes agree on the ground energy.
2. Cone-restricted and full descents agree on excitation energies.
3. Causally disjoint insertions do not interact.
4. Observable validation (Hermiticity, support size, overlapping supports).
"""

import numpy as np
import pytest

from holomera.core.engine import (
    excitation_energy,
    expectation,
    get_engine,
    ground_energy,
    ground_energy_ascending,
    interaction_energy,
    two_point,
)
from holomera.core.lattice import ChainHamiltonian, energy_density_tensor, local_term, sigma_proxy
from holomera.core.network import BulkCoordinate
from holomera.core.network.core_state import build_network
from holomera.core.tensor import LocalOperator
from holomera.domain.errors import CapacityError, ConfigError, DuplicateInsertionError, NonHermitianError


@pytest.fixture(scope="module")
def net6():
    """Canonical network with D=6 (N=64)."""
    return build_network(6)


def test_ground_energy_routes_agree(net4) -> None:
    """TC-01: Verify E_GS by descent equals <core|H_eff|core>."""
    assert ground_energy(net4) == pytest.approx(ground_energy_ascending(net4), abs=1e-9)


def test_engine_is_shared_per_network(net4) -> None:
    """TC-02: Verify one cached engine per network object."""
    assert get_engine(net4) is get_engine(net4)


def test_cone_and_full_descent_agree(net4) -> None:
    """TC-03: Verify restricting the descent to the causal cone changes nothing."""
    flips = (BulkCoordinate(2, 1), BulkCoordinate(3, 5))
    cone = excitation_energy(net4, flips, region="cone")
    full = excitation_energy(net4, flips, region="full")
    assert cone == pytest.approx(full, abs=1e-12)


def test_disjoint_cones_do_not_interact(net6) -> None:
    """TC-04: Verify insertions with disjoint dirty regions have exactly zero interaction."""
    x1, x2 = BulkCoordinate(5, 0), BulkCoordinate(5, 3)
    assert interaction_energy(net6, x1, x2) == 0.0


def test_hamiltonian_expectation_matches_energies(net4) -> None:
    """TC-05: Verify <H> with and without insertions is E_GS + E_excitation."""
    chain = ChainHamiltonian(net4.n_sites)
    x = BulkCoordinate(3, 2)

    assert expectation(net4, (), chain) == pytest.approx(ground_energy(net4), abs=1e-12)
    assert expectation(net4, (x,), chain) == pytest.approx(
        ground_energy(net4) + excitation_energy(net4, (x,)), abs=1e-12
    )


def test_local_terms_sum_to_ground_energy(net4) -> None:
    """TC-06: Verify N/(4 pi) sum_s <h_s> reproduces E_GS."""
    n = net4.n_sites
    total = sum(expectation(net4, (), local_term(s, n)) for s in range(n))
    assert n / (4 * np.pi) * total == pytest.approx(ground_energy(net4), abs=1e-9)


def test_expectation_rejects_invalid_observables(net4) -> None:
    """TC-07: Verify non-Hermitian and oversized observables are refused."""
    raising = np.array([[0, 1], [0, 0]], dtype=np.complex128)
    with pytest.raises(NonHermitianError):
        expectation(net4, (), LocalOperator((0,), raising))

    big = LocalOperator(tuple(range(7)), np.zeros((2,) * 14, dtype=np.complex128))
    with pytest.raises(CapacityError):
        expectation(net4, (), big)


def test_expectation_rejects_duplicate_insertions(net4) -> None:
    """TC-08: Verify duplicated insertion coordinates are refused."""
    x = BulkCoordinate(2, 0)
    with pytest.raises(DuplicateInsertionError):
        expectation(net4, (x, x), local_term(0, net4.n_sites))


def test_two_point_rejects_overlapping_supports(net4) -> None:
    """TC-09: Verify correlators need disjoint supports."""
    with pytest.raises(ConfigError):
        two_point(net4, energy_density_tensor(), energy_density_tensor(), 2)
    with pytest.raises(ConfigError):
        two_point(net4, sigma_proxy(), sigma_proxy(), 0)
