from __future__ import annotations

"""
AdS Prediction Curves.

Tabulates the closed-form predictions on the integer radial grid of a
network of depth D, in the row format consumed by the artifact writers.
"""

import logging
from typing import Any, Dict, List

from holomera.core.gravity.ads import (
    AdSParams,
    angular_gravity_potential,
    boost_factor,
    boost_factor_asymptotic,
    collapsed_gravity_potential,
    one_particle_energy,
    radial_gravity_potential,
    sub_ads_potential,
)

logger = logging.getLogger(__name__)


def single_particle_curve(p: AdSParams, depth: int) -> List[Dict[str, Any]]:
    """Rest energy ``mc^2 cosh(rho/ell)`` for ``rho = 0..D-1``."""
    return [
        {"rho": rho, "energy": one_particle_energy(p, float(rho))}
        for rho in range(depth)
    ]


def radial_curve(p: AdSParams, depth: int, rho_fixed: int) -> List[Dict[str, Any]]:
    """Radial gravitational potential with the second particle held at ``rho_fixed``."""
    rows: List[Dict[str, Any]] = []
    for rho in range(depth):
        if rho == rho_fixed:
            continue
        d = float(rho - rho_fixed)
        rows.append({
            "rho1": rho,
            "rho2": rho_fixed,
            "boost_exact": boost_factor(float(rho), float(rho_fixed), p.ell),
            "boost_asymptotic": boost_factor_asymptotic(float(rho), float(rho_fixed), p.ell),
            "v_exact": radial_gravity_potential(p, float(rho), float(rho_fixed)),
            "v_asymptotic": radial_gravity_potential(p, float(rho), float(rho_fixed), exact=False),
            "v_collapsed": collapsed_gravity_potential(p, d),
            "v_sub_ads": sub_ads_potential(p, d),
        })
    return rows


def angular_curve(p: AdSParams, rho: int, max_arclength: float, n_points: int = 64) -> List[Dict[str, Any]]:
    """Angular gravitational potential at fixed radius on a uniform arclength grid."""
    step = max_arclength / max(1, n_points - 1)
    return [
        {"rho": rho, "arclength": i * step, "v": angular_gravity_potential(p, float(rho), i * step)}
        for i in range(n_points)
    ]


def ads_prediction_curves(p: AdSParams, depth: int, rho_fixed: int) -> Dict[str, List[Dict[str, Any]]]:
    """
    All prediction tables emitted by ``ads-predict``.

    Args:
        p: Geometry and particle parameters.
        depth: Network depth setting the radial grid.
        rho_fixed: Radius of the reference particle for radial curves.

    Returns:
        Dict[str, List[Dict[str, Any]]]: ``energy``, ``radial`` and ``angular`` tables.
    """
    curves = {
        "energy": single_particle_curve(p, depth),
        "radial": radial_curve(p, depth, rho_fixed),
        "angular": angular_curve(p, depth - 1, 4.0 * p.ell),
    }
    logger.info(f"AdS predictions tabulated for D={depth} (ell={p.ell:.6f}, c={p.c:.6f})")
    return curves
