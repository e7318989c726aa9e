from __future__ import annotations

"""
Unit tests for Hologron Energetics and Potentials.

Verifies:
1. Single and pair energies, their symmetry and the interaction identity.
2. Radial and angular sweeps, including the exact zero of disjoint cones.
3. Collapse bookkeeping and the random-gauge ensemble.
"""

import pytest

from holomera.core.engine import excitation_energy
from holomera.core.hologrons import (
    angular_potential,
    angular_spread,
    collapse,
    collapse_family,
    gauge_sweep,
    is_monotone,
    pair_energy,
    pair_interaction,
    radial_pairs,
    radial_potential,
    radial_profile,
    single_energy,
)
from holomera.core.network import BulkCoordinate
from holomera.core.network.core_state import build_network
from holomera.domain.errors import ConfigError, DuplicateInsertionError, SiteIndexError


@pytest.fixture(scope="module")
def net5():
    """Canonical network with D=5 (N=32)."""
    return build_network(5)


def test_pair_energy_is_symmetric(net4) -> None:
    """TC-01: Verify E_2h(x1, x2) = E_2h(x2, x1) exactly."""
    x1, x2 = BulkCoordinate(2, 1), BulkCoordinate(3, 5)
    assert pair_energy(net4, x1, x2) == pair_energy(net4, x2, x1)


def test_interaction_identity(net4) -> None:
    """TC-02: Verify V = E_2h - E_1h(x1) - E_1h(x2)."""
    x1, x2 = BulkCoordinate(2, 0), BulkCoordinate(3, 0)
    expected = pair_energy(net4, x1, x2) - single_energy(net4, x1) - single_energy(net4, x2)
    assert pair_interaction(net4, x1, x2) == pytest.approx(expected, abs=1e-10)


def test_same_site_insertion_is_refused(net4) -> None:
    """TC-03: Verify both hologrons at one coordinate raise DuplicateInsertionError."""
    x = BulkCoordinate(2, 2)
    with pytest.raises(DuplicateInsertionError):
        pair_energy(net4, x, x)
    with pytest.raises(DuplicateInsertionError):
        pair_interaction(net4, x, x)
    with pytest.raises(SiteIndexError):
        single_energy(net4, BulkCoordinate(4, 0))


def test_radial_profile_follows_lineage(net5) -> None:
    """TC-04: Verify the profile walks (rho, s * 2^(rho - rho0)) out to D-1."""
    rows = radial_profile(net5, s0=1, rho0=2)

    assert [(r["rho"], r["s"]) for r in rows] == [(2, 1), (3, 2), (4, 4)]
    assert all(r["energy"] == pytest.approx(single_energy(net5, BulkCoordinate(r["rho"], r["s"]))) for r in rows)


def test_single_energy_grows_towards_boundary(net5) -> None:
    """TC-05: Verify hologrons closer to the boundary cost more energy."""
    energies = [r["energy"] for r in radial_profile(net5)]
    assert all(e > 0.0 for e in energies)
    assert energies == sorted(energies)


def test_angular_spread_is_order_one(net4) -> None:
    """TC-06: Verify single energies are nearly translation invariant at fixed radius."""
    assert 1.0 <= angular_spread(net4, 3) < 2.0


def test_radial_pairs_enumeration() -> None:
    """TC-07: Verify pairs rho1 < rho2 along one lineage and the range guard."""
    pairs = radial_pairs(5, (2, 4), 0)

    assert len(pairs) == 3
    assert pairs[0] == (BulkCoordinate(2, 0), BulkCoordinate(3, 0))
    with pytest.raises(ConfigError):
        radial_pairs(5, (1, 4))
    with pytest.raises(ConfigError):
        radial_pairs(5, (3, 5))


def test_radial_potential_both_orders(net5) -> None:
    """TC-08: Verify each pair is emitted in both orders with the same interaction."""
    curve = radial_potential(net5, (2, 4))
    once = radial_potential(net5, (2, 4), both_orders=False)

    assert len(curve.points) == 2 * len(once.points) == 6
    assert curve.points[0].interaction == curve.points[1].interaction
    assert curve.points[1].x1 == curve.points[0].x2


def test_angular_potential_vanishes_for_disjoint_cones() -> None:
    """TC-09: Verify pairs three isometries apart have exactly zero interaction."""
    net = build_network(6)
    curve = angular_potential(net, range(4, 6), delta_s=3)

    assert len(curve.points) == 2
    assert all(v == 0.0 for v in curve.interactions())


def test_angular_potential_guards(net4) -> None:
    """TC-10: Verify invalid angular separations are refused."""
    with pytest.raises(ConfigError):
        angular_potential(net4, [2], delta_s=0)
    with pytest.raises(ConfigError):
        angular_potential(net4, [2], delta_s=4)


def test_collapse_averages_per_separation(net5) -> None:
    """TC-11: Verify collapse gives one sorted value per radial separation."""
    curve = radial_potential(net5, (2, 4))
    series = collapse(curve)

    assert [s for s, _ in series] == [1.0, 2.0]
    raw, normalized = collapse_family(curve)
    assert len(raw) == len(normalized) == 3
    assert set(raw[0]) == {1.0, 2.0}


def test_collapsed_value_divides_by_boost(net4) -> None:
    """TC-12: Verify V_collapsed = V / min(E1, E2)."""
    point = radial_potential(net4, (2, 3), both_orders=False).points[0]
    assert point.boost == min(point.e1, point.e2)
    assert point.collapsed == pytest.approx(point.interaction / point.boost)
    assert point.pair_energy == pytest.approx(excitation_energy(net4, (point.x1, point.x2)), abs=1e-10)


def test_is_monotone() -> None:
    """TC-13: Verify monotonicity detection in both directions."""
    assert is_monotone([1.0, 2.0, 2.0, 5.0])
    assert is_monotone([3.0, 1.0, 0.0])
    assert not is_monotone([1.0, 0.0, 2.0])


def test_gauge_sweep_is_reproducible(net4) -> None:
    """TC-14: Verify seeded gauge ensembles and their averaged series."""
    sweep_a = gauge_sweep(net4, 2, seed=3, rho_range=(2, 3))
    sweep_b = gauge_sweep(net4, 2, seed=3, rho_range=(2, 3))

    assert sweep_a.n_gauges == 2
    assert [c.gauge_id for c in sweep_a.curves] == [1, 2]
    assert sweep_a.collapsed == sweep_b.collapsed
    assert len(sweep_a.averaged) == 1
    assert 0 <= sweep_a.non_monotone <= 2
    with pytest.raises(ConfigError):
        gauge_sweep(net4, 0, seed=3, rho_range=(2, 3))
