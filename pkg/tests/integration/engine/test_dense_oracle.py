from __future__ import annotations

"""
Integration tests: Expectation Engine vs Dense Statevector Oracle.

Every energy produced by the window engine is compared with the value
obtained from the full boundary state and the sparse chain Hamiltonian.
"""

import itertools

import numpy as np
import pytest

from holomera.core.engine import excitation_energy, expectation, ground_energy, two_point
from holomera.core.lattice import build_dense, epsilon_proxy, local_term, momentum_density, sigma_proxy
from holomera.core.network import BulkCoordinate, HologronGauge
from holomera.core.network.core_state import build_network
from holomera.core.network.statevector import boundary_vector, dense_energy
from holomera.core.tensor import local_operator_sparse

TOL = 1e-9


def _coords(net):
    return [BulkCoordinate(rho, s) for rho in net.layers for s in range(2 ** rho)]


def _dense_expectation(vec: np.ndarray, op, sites, n: int) -> float:
    return float(np.vdot(vec, local_operator_sparse(op, sites, n) @ vec).real)


def test_ground_energy_matches_oracle(net3, net4) -> None:
    """TC-01: Verify E_GS agrees with the dense oracle at N=8 and N=16."""
    for net in (net3, net4):
        assert abs(ground_energy(net) - dense_energy(net)) < TOL


def test_all_single_and_pair_excitations_at_n8(net3) -> None:
    """TC-02: Verify every single and pair excitation energy at N=8."""
    e0 = dense_energy(net3)
    coords = _coords(net3)
    for x in coords:
        assert abs(excitation_energy(net3, (x,)) - (dense_energy(net3, (x,)) - e0)) < TOL
    for x1, x2 in itertools.combinations(coords, 2):
        engine = excitation_energy(net3, (x1, x2))
        assert abs(engine - (dense_energy(net3, (x1, x2)) - e0)) < TOL


def test_single_excitations_at_n16(net4) -> None:
    """TC-03: Verify every single excitation energy at N=16."""
    e0 = dense_energy(net4)
    for x in _coords(net4):
        assert abs(excitation_energy(net4, (x,)) - (dense_energy(net4, (x,)) - e0)) < TOL


@pytest.mark.slow
def test_all_pair_excitations_at_n16(net4) -> None:
    """TC-04: Verify every pair excitation energy at N=16."""
    h = build_dense(net4.n_sites)
    e0 = dense_energy(net4)
    for x1, x2 in itertools.combinations(_coords(net4), 2):
        vec = boundary_vector(net4, (x1, x2))
        oracle = float(np.vdot(vec, h @ vec).real) - e0
        assert abs(excitation_energy(net4, (x1, x2)) - oracle) < TOL


def test_gauged_excitations_match_oracle() -> None:
    """TC-05: Verify agreement holds for a non-canonical hologron gauge."""
    net = build_network(3, gauge=HologronGauge(theta=(0.4, 1.3, -0.8), phi=0.9))
    e0 = dense_energy(net)
    flips = (BulkCoordinate(2, 1), BulkCoordinate(2, 2))
    assert abs(excitation_energy(net, flips) - (dense_energy(net, flips) - e0)) < TOL


def test_local_expectations_match_oracle(net4) -> None:
    """TC-06: Verify <h_s> and <p_s> with an insertion against the dense state."""
    n = net4.n_sites
    flips = (BulkCoordinate(3, 4),)
    vec = boundary_vector(net4, flips)
    for s in (0, 5, 9, 15):
        h = local_term(s, n)
        p = momentum_density(s, n)
        assert abs(expectation(net4, flips, h) - _dense_expectation(vec, h.tensor, h.sites, n)) < TOL
        assert abs(expectation(net4, flips, p) - _dense_expectation(vec, p.tensor, p.sites, n)) < TOL


def test_two_point_functions_match_oracle(net4) -> None:
    """TC-07: Verify connected correlators of the spin and energy proxies."""
    n = net4.n_sites
    vec = boundary_vector(net4)
    sigma, eps = sigma_proxy(), epsilon_proxy()

    for r in (1, 4, 8):
        joint = _dense_expectation(vec, np.kron(sigma, sigma), [0, r], n)
        single = _dense_expectation(vec, sigma, [0], n) * _dense_expectation(vec, sigma, [r], n)
        assert abs(two_point(net4, sigma, sigma, r) - (joint - single)) < TOL

    r = 4
    joint = _dense_expectation(
        vec, np.kron(eps.reshape(8, 8), eps.reshape(8, 8)), [0, 1, 2, r, r + 1, r + 2], n
    )
    single = _dense_expectation(vec, eps, [0, 1, 2], n) * _dense_expectation(vec, eps, [r, r + 1, r + 2], n)
    assert abs(two_point(net4, eps, eps, r) - (joint - single)) < TOL
