from __future__ import annotations

"""
Unit tests for the AdS3/BTZ Comparison Theory.

Verifies:
1. Parameter validation and the bulk speed of light.
2. Single-particle energies in AdS and BTZ, including their limits.
3. Radial and angular two-body potentials.
4. Prediction tables for the artifact writers.
"""

import math

import pytest

from holomera.core.gravity import (
    AdSParams,
    NATURAL_UNITS,
    ads_prediction_curves,
    angular_bracket,
    angular_bracket_root,
    angular_gravity_potential,
    boost_factor,
    btz_energy,
    circular_orbit_momentum,
    collapsed_gravity_potential,
    natural_units,
    one_particle_energy,
    radial_gravity_potential,
    sub_ads_potential,
    super_ads_energy,
)
from holomera.domain.errors import ParameterError, SingularCentrifugalError


@pytest.mark.parametrize("kwargs", [{"ell": 0.0}, {"ell": -1.0}, {"m": -0.1}, {"L": 0.0}])
def test_invalid_parameters_raise(kwargs) -> None:
    """TC-01: Verify non-physical parameters are refused."""
    with pytest.raises(ParameterError):
        AdSParams(**kwargs)


def test_natural_units_give_c_equal_ell() -> None:
    """TC-02: Verify c = 2 pi ell v / L reduces to ell = 1/log 2."""
    assert NATURAL_UNITS.ell == pytest.approx(1.0 / math.log(2.0))
    assert NATURAL_UNITS.c == pytest.approx(NATURAL_UNITS.ell)
    assert AdSParams(ell=2.0, L=math.pi, v=0.5).c == pytest.approx(2.0)


def test_rest_energy_grows_as_cosh() -> None:
    """TC-03: Verify E = mc^2 cosh(rho/ell) for a particle at rest."""
    p = natural_units(m=0.7)
    for rho in (0.0, 1.0, 3.5):
        assert one_particle_energy(p, rho) == pytest.approx(0.7 * p.c ** 2 * math.cosh(rho / p.ell))


def test_single_particle_errors() -> None:
    """TC-04: Verify negative radii and centrifugal terms at the origin are refused."""
    with pytest.raises(ParameterError):
        one_particle_energy(NATURAL_UNITS, -1.0)
    with pytest.raises(SingularCentrifugalError):
        one_particle_energy(NATURAL_UNITS, 0.0, p_theta=1.0)


def test_circular_orbit_energy() -> None:
    """TC-05: Verify the circular-orbit momentum gives E = mc^2 cosh^2(rho/ell)."""
    p = natural_units(m=1.3)
    rho = 2.0
    p_theta = circular_orbit_momentum(p, rho)
    expected = 1.3 * p.c ** 2 * math.cosh(rho / p.ell) ** 2
    assert one_particle_energy(p, rho, p_theta=p_theta) == pytest.approx(expected, rel=1e-12)


def test_btz_reduces_to_ads_without_gravity() -> None:
    """TC-06: Verify BTZ energies equal AdS energies at G = 0."""
    p = natural_units(m=1.0, G=0.0)
    for rho, p_rho, p_theta in [(0.5, 0.0, 0.0), (1.5, 0.3, 0.0), (2.0, 0.2, 0.4)]:
        assert btz_energy(p, rho, p_rho, p_theta) == pytest.approx(
            one_particle_energy(p, rho, p_rho, p_theta), rel=1e-12
        )


def test_super_ads_expansion_tracks_btz() -> None:
    """TC-07: Verify the first-order expansion agrees with BTZ for weak gravity."""
    p = natural_units(m=1.0, G=1e-4)
    rho = 3.0
    exact = btz_energy(p, rho)
    approx = super_ads_energy(p, rho)
    assert abs(exact - approx) < 1e-6
    assert approx < one_particle_energy(p, rho)


def test_btz_horizon_is_refused() -> None:
    """TC-08: Verify radii inside the horizon raise ParameterError."""
    with pytest.raises(ParameterError):
        btz_energy(natural_units(m=1.0, G=1.0), 0.0)


def test_radial_potential_exact_form() -> None:
    """TC-09: Verify V = -b(rho1, rho2) 4 G m^2 / cosh(d/ell)."""
    p = natural_units(m=0.5, G=0.2)
    rho1, rho2 = 3.0, 5.0
    d = math.cosh((rho1 - rho2) / p.ell)
    expected = -boost_factor(rho1, rho2, p.ell) * 4.0 * 0.2 * 0.25 / d
    assert radial_gravity_potential(p, rho1, rho2) == pytest.approx(expected, rel=1e-12)
    assert expected / boost_factor(rho1, rho2, p.ell) == pytest.approx(
        collapsed_gravity_potential(p, rho1 - rho2), rel=1e-12
    )
    assert radial_gravity_potential(p, rho1, rho2, exact=False) < 0.0


def test_sub_ads_matches_collapsed_at_short_distance() -> None:
    """TC-10: Verify the quadratic expansion near zero separation."""
    p = natural_units(m=1.0, G=1.0)
    d = 0.01
    assert sub_ads_potential(p, d) == pytest.approx(collapsed_gravity_potential(p, d), abs=1e-8)
    assert sub_ads_potential(p, 0.0) == pytest.approx(-4.0)


def test_angular_bracket_sign_change() -> None:
    """TC-11: Verify the angular potential is attractive close by and repulsive far away."""
    root = angular_bracket_root()

    assert 0.0 < root < 2.0
    assert angular_bracket(root) == pytest.approx(0.0, abs=1e-12)
    assert angular_bracket(0.0) == pytest.approx(-1.0)
    p = natural_units(m=1.0, G=1.0)
    assert angular_gravity_potential(p, 2.0, 0.5 * root * p.ell) < 0.0
    assert angular_gravity_potential(p, 2.0, 1.5 * root * p.ell) > 0.0


def test_prediction_tables() -> None:
    """TC-12: Verify the tables and that the reference radius is skipped."""
    curves = ads_prediction_curves(natural_units(m=1.0, G=0.1), depth=6, rho_fixed=3)

    assert set(curves) == {"energy", "radial", "angular"}
    assert [r["rho"] for r in curves["energy"]] == list(range(6))
    assert [r["rho1"] for r in curves["radial"]] == [0, 1, 2, 4, 5]
    assert all(r["v_exact"] < 0.0 for r in curves["radial"])
    assert curves["angular"][0]["arclength"] == 0.0
