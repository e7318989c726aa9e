from __future__ import annotations

"""
Closed-Form AdS3 and BTZ Predictions.

Energies and two-body potentials of point particles in global AdS3 (and in
the static BTZ background sourced by one of them), used as the comparison
theory for the tensor-network hologron energetics. Formulas keep their
explicit factors of the bulk speed of light ``c``.
"""

import logging
import math
from dataclasses import dataclass

from scipy.optimize import brentq

from holomera.domain import constants as const
from holomera.domain.errors import ParameterError, SingularCentrifugalError

logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# PARAMETERS
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class AdSParams:
    """
    Physical parameters of the bulk geometry and the point particles.

    Attributes:
        ell: AdS radius.
        m: Rest mass of each particle.
        G: Newton constant.
        L: Circumference of the boundary circle.
        v: Velocity of boundary excitations.
    """
    ell: float = const.DEFAULT_ELL_ADS
    m: float = 1.0
    G: float = 0.0
    L: float = 2.0 * math.pi
    v: float = const.VELOCITY

    def __post_init__(self) -> None:
        if not self.ell > 0.0:
            raise ParameterError(f"Invalid AdS radius {self.ell}: must be > 0.")
        if self.m < 0.0:
            raise ParameterError(f"Invalid mass {self.m}: must be >= 0.")
        if not self.L > 0.0:
            raise ParameterError(f"Invalid boundary circumference {self.L}: must be > 0.")

    @property
    def c(self) -> float:
        return unit_conversion(self)


def natural_units(m: float = 1.0, G: float = 0.0) -> AdSParams:
    """Preset with ``ell = 1/log 2``, ``v = 1`` and ``L = 2 pi``; m and G stay free."""
    return AdSParams(ell=const.DEFAULT_ELL_ADS, m=m, G=G, L=2.0 * math.pi, v=const.VELOCITY)


NATURAL_UNITS = natural_units()


def unit_conversion(p: AdSParams) -> float:
    """Bulk speed of light ``c = 2 pi ell v / L``."""
    return 2.0 * math.pi * p.ell * p.v / p.L


# -----------------------------------------------------------------------------
# SINGLE PARTICLE
# -----------------------------------------------------------------------------

def one_particle_energy(p: AdSParams, rho: float, p_rho: float = 0.0, p_theta: float = 0.0) -> float:
    """
    Energy of a single particle at radius ``rho`` in global AdS3.

    ``E = cosh(rho/ell) sqrt(m^2 c^4 + P_rho^2 c^2 + P_theta^2 c^2 / (ell^2 sinh^2(rho/ell)))``.

    Raises:
        ParameterError: If ``rho`` is negative.
        SingularCentrifugalError: If ``P_theta != 0`` at the origin.
    """
    _check_radius(rho)
    c = p.c
    x = rho / p.ell
    return math.cosh(x) * math.sqrt(
        (p.m * c * c) ** 2 + (p_rho * c) ** 2 + _centrifugal(p, x, p_theta)
    )


def btz_energy(p: AdSParams, rho: float, p_rho: float = 0.0, p_theta: float = 0.0) -> float:
    """
    Energy of a particle of mass ``m`` in the BTZ background sourced by a second
    particle of the same mass resting at the origin.

    Raises:
        ParameterError: If ``rho`` is negative or lies inside the horizon
            (``cosh^2(rho/ell) < 8 G m / c^2``).
        SingularCentrifugalError: If ``P_theta != 0`` at the origin.
    """
    _check_radius(rho)
    c = p.c
    x = rho / p.ell
    ch2 = math.cosh(x) ** 2
    lapse = ch2 - 8.0 * p.G * p.m / (c * c)
    if lapse < 0.0:
        raise ParameterError(f"Radius rho={rho} lies inside the BTZ horizon.")
    return math.sqrt(lapse) * math.sqrt(
        (p.m * c * c) ** 2 + (lapse / ch2) * (p_rho * c) ** 2 + _centrifugal(p, x, p_theta)
    )


def super_ads_energy(p: AdSParams, rho: float) -> float:
    """Static BTZ energy to second order in m: ``mc^2 cosh(rho/ell) - 4 G m^2 / cosh(rho/ell)``."""
    _check_radius(rho)
    ch = math.cosh(rho / p.ell)
    c = p.c
    return p.m * c * c * ch - 4.0 * p.G * p.m ** 2 / ch


btz_energy_expansion = super_ads_energy


def circular_orbit_momentum(p: AdSParams, rho: float) -> float:
    """Angular momentum ``P_theta = m c ell sinh^2(rho/ell)``; gives ``E = mc^2 cosh^2(rho/ell)``."""
    _check_radius(rho)
    return p.m * p.c * p.ell * math.sinh(rho / p.ell) ** 2


# -----------------------------------------------------------------------------
# TWO-BODY POTENTIALS
# -----------------------------------------------------------------------------

def boost_factor(rho1: float, rho2: float, ell: float = const.DEFAULT_ELL_ADS) -> float:
    """``b(rho1, rho2) = cosh(rho1/ell) / cosh((rho1 - rho2)/ell)``."""
    return math.cosh(rho1 / ell) / math.cosh((rho1 - rho2) / ell)


def boost_factor_asymptotic(rho1: float, rho2: float, ell: float = const.DEFAULT_ELL_ADS) -> float:
    """Deep super-AdS limit of the boost factor, ``min(e^{rho1/ell}, e^{rho2/ell})``."""
    return math.exp(min(rho1, rho2) / ell)


def radial_gravity_potential(p: AdSParams, rho1: float, rho2: float, *, exact: bool = True) -> float:
    """
    Gravitational interaction of two particles on the same radial geodesic.

    Args:
        p: Geometry and particle parameters.
        rho1: Radius of the first particle.
        rho2: Radius of the second particle.
        exact: If True, keeps the full boost factor and ``1/cosh`` falloff;
            otherwise returns ``-min(e^{rho1/ell}, e^{rho2/ell}) 8 G m^2 e^{-|rho1-rho2|/ell}``.
    """
    gm2 = p.G * p.m ** 2
    if exact:
        d = math.cosh((rho1 - rho2) / p.ell)
        return -boost_factor(rho1, rho2, p.ell) * 4.0 * gm2 / d
    return -boost_factor_asymptotic(rho1, rho2, p.ell) * 8.0 * gm2 * math.exp(-abs(rho1 - rho2) / p.ell)


def collapsed_gravity_potential(p: AdSParams, separation: float) -> float:
    """Rest-frame potential ``-4 G m^2 / cosh(d/ell)``, before the boost."""
    return -4.0 * p.G * p.m ** 2 / math.cosh(separation / p.ell)


def sub_ads_potential(p: AdSParams, separation: float) -> float:
    """Small-separation expansion ``-4 G m^2 (1 - d^2 / (2 ell^2))``."""
    return -4.0 * p.G * p.m ** 2 * (1.0 - separation ** 2 / (2.0 * p.ell ** 2))


def angular_bracket(r: float) -> float:
    """``(r^2/2)(1 + 1/sqrt(1 + r^2/4)) - 1`` with ``r = |s1 - s2| / ell``."""
    return 0.5 * r * r * (1.0 + 1.0 / math.sqrt(1.0 + 0.25 * r * r)) - 1.0


def angular_gravity_potential(p: AdSParams, rho: float, arclength: float) -> float:
    """Gravitational interaction of two particles at equal radius, ``|s1 - s2|`` apart."""
    return math.cosh(rho / p.ell) * 4.0 * p.G * p.m ** 2 * angular_bracket(abs(arclength) / p.ell)


def angular_bracket_root() -> float:
    """Arclength ``r* = |s|/ell`` at which the angular interaction changes sign."""
    root = brentq(angular_bracket, 0.0, 2.0, xtol=1e-14)
    logger.debug(f"Angular bracket root r*={root:.12f}")
    return float(root)


# -----------------------------------------------------------------------------
# PRIVATE HELPERS
# -----------------------------------------------------------------------------

def _check_radius(rho: float) -> None:
    if rho < 0.0:
        raise ParameterError(f"Invalid radius rho={rho}: must be >= 0.")


def _centrifugal(p: AdSParams, x: float, p_theta: float) -> float:
    if p_theta == 0.0:
        return 0.0
    sh = math.sinh(x)
    if sh == 0.0:
        raise SingularCentrifugalError("Non-zero angular momentum at rho=0.")
    return (p_theta * p.c) ** 2 / (p.ell * sh) ** 2
