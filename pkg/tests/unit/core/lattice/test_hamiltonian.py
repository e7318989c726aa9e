from __future__ import annotations

"""
Unit tests for the Boundary Chain Hamiltonian and Exact Diagonalization.

Verifies:
1. Local energy and momentum densities (support, Hermiticity, continuity).
2. Dense Hamiltonian capacity guard and parity-resolved ground states.
"""

import math

import numpy as np
import pytest

from holomera.core.lattice import (
    ChainHamiltonian,
    build_dense,
    continuity_residual,
    ed_energy_density,
    ed_ground,
    energy_density_tensor,
    local_term,
    momentum_density,
    prefactor,
    sector_projector,
)
from holomera.core.tensor import is_hermitian, operator_matrix
from holomera.domain.errors import CapacityError, SiteIndexError


def test_energy_density_on_plus_state() -> None:
    """TC-01: Verify <+++|h|+++> = -1 (XZX vanishes, each XX gives 1)."""
    plus = np.ones(8, dtype=np.complex128) / math.sqrt(8.0)
    h = operator_matrix(energy_density_tensor())

    assert np.vdot(plus, h @ plus).real == pytest.approx(-1.0, abs=1e-12)
    assert is_hermitian(h)


def test_local_term_wraps_periodically() -> None:
    """TC-02: Verify h_0 acts on (N-1, 0, 1) and out-of-range centers are rejected."""
    term = local_term(0, 8)
    assert term.sites == (7, 0, 1)
    assert term.center == 0
    with pytest.raises(SiteIndexError):
        local_term(8, 8)


def test_momentum_density_support() -> None:
    """TC-03: Verify p_s lives on s-2..s+1 and is Hermitian."""
    p = momentum_density(0, 8)
    assert p.sites == (6, 7, 0, 1)
    assert is_hermitian(p.tensor)


def test_continuity_equation_holds() -> None:
    """TC-04: Verify i[H, h_s] = p_{s+1} - p_s on a small ring."""
    assert continuity_residual(8, s=3) < 1e-10
    with pytest.raises(SiteIndexError):
        continuity_residual(4)


def test_chain_hamiltonian_terms() -> None:
    """TC-05: Verify the chain lists one term per site with the N/(4 pi) prefactor."""
    chain = ChainHamiltonian(8)
    assert len(chain.terms()) == 8
    assert chain.prefactor == pytest.approx(8 / (4 * math.pi))


def test_build_dense_capacity_guard() -> None:
    """TC-06: Verify dense matrices beyond 16 sites are refused."""
    with pytest.raises(CapacityError):
        build_dense(18)


def test_build_dense_is_hermitian_and_parity_symmetric() -> None:
    """TC-07: Verify the dense Hamiltonian is Hermitian and commutes with the spin flip."""
    n = 6
    h = build_dense(n).toarray()
    np.testing.assert_allclose(h, h.conj().T, atol=1e-12)

    even = sector_projector(n, +1)
    odd = sector_projector(n, -1)
    assert len(even) + len(odd) == 2 ** n
    assert np.abs(h[np.ix_(even, odd)]).max() == 0.0


def test_ed_ground_is_normalized_eigenstate() -> None:
    """TC-08: Verify the ED ground state is a normalized eigenvector of the chain."""
    n = 8
    result = ed_ground(n)
    h = build_dense(n)
    vec = result.state

    assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(h @ vec, result.energy * vec, atol=1e-8)
    assert result.parity in (+1, -1)
    assert result.gap_to_other_sector >= -1e-10
    assert result.energy_density == pytest.approx(result.energy / prefactor(n) / n)


def test_ed_energy_density_approaches_thermodynamic_limit() -> None:
    """TC-09: Verify the ED density at N=8 is close to -4/pi."""
    assert abs(ed_energy_density(8) + 4.0 / math.pi) < 0.05


def test_ed_ground_limits() -> None:
    """TC-10: Verify chain length limits of the exact solver."""
    with pytest.raises(CapacityError):
        ed_ground(18)
    with pytest.raises(SiteIndexError):
        ed_ground(2)
