from __future__ import annotations

from .ads import (
    NATURAL_UNITS,
    AdSParams,
    angular_bracket,
    angular_bracket_root,
    angular_gravity_potential,
    boost_factor,
    boost_factor_asymptotic,
    btz_energy,
    btz_energy_expansion,
    circular_orbit_momentum,
    collapsed_gravity_potential,
    one_particle_energy,
    natural_units,
    radial_gravity_potential,
    sub_ads_potential,
    super_ads_energy,
    unit_conversion,
)
from .curves import ads_prediction_curves, angular_curve, radial_curve, single_particle_curve

__all__ = [
    "AdSParams",
    "NATURAL_UNITS",
    "ads_prediction_curves",
    "angular_bracket",
    "angular_bracket_root",
    "angular_curve",
    "angular_gravity_potential",
    "boost_factor",
    "boost_factor_asymptotic",
    "btz_energy",
    "btz_energy_expansion",
    "circular_orbit_momentum",
    "collapsed_gravity_potential",
    "one_particle_energy",
    "natural_units",
    "radial_curve",
    "radial_gravity_potential",
    "single_particle_curve",
    "sub_ads_potential",
    "super_ads_energy",
    "unit_conversion",
]
