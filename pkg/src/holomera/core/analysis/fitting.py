from __future__ import annotations

"""
Parameter Extraction.

Linear least-squares fits used to read physical parameters off the
hologron curves:

* single particle: ``log E_1h = log(mc^2/2) + rho / ell``, or the full
  ``E_1h = mc^2 cosh(rho / ell)`` solved by non-linear least squares;
* tail: ``V~ = C1 - C2 exp(-d/ell)``;
* W model: ``A + 4B e^{-d/ell} + 2C e^{-1.5 d/ell} + 6D e^{-2 d/ell}``;
* power law: ``log|C(r)| = log a - 2 Delta log r``.

Uncertainties are square roots of the diagonal of ``s^2 (X^T X)^{-1}`` with
``s^2`` the residual variance.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg as la
from scipy.optimize import curve_fit

from holomera.domain import constants as const
from holomera.domain.errors import ConditioningError, FitDomainError

logger = logging.getLogger(__name__)

SINGLE_PARTICLE_FORMS = ("exp", "cosh")


@dataclass(frozen=True)
class FitResult:
    """
    Outcome of a linear least-squares fit.

    Attributes:
        model: Model identifier (``1p``, ``tail``, ``W``, ``power``).
        params: Fitted (and derived) parameters.
        sigmas: One-sigma uncertainties, same keys as ``params``.
        residual: Euclidean norm of the residual vector.
        window: Inclusive abscissa window used.
        n_points: Number of data points in the window.
        fixed: Parameters held fixed during the fit.
    """
    model: str
    params: Dict[str, float]
    sigmas: Dict[str, float]
    residual: float
    window: Tuple[float, float]
    n_points: int
    fixed: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model,
            "params": dict(self.params),
            "sigmas": dict(self.sigmas),
            "window": list(self.window),
            "residual": self.residual,
            "n_points": self.n_points,
            "fixed": dict(self.fixed),
        }


# -----------------------------------------------------------------------------
# PUBLIC API
# -----------------------------------------------------------------------------

def fit_single_particle(
        rho: Sequence[float],
        energy: Sequence[float],
        window: Optional[Tuple[float, float]] = None,
        form: str = "exp",
) -> FitResult:
    """
    Fit the single-hologron energy against the radius.

    ``exp`` is the asymptotic form ``E_1h = (mc^2/2) exp(rho/ell)``, a linear
    regression of ``log E_1h``. ``cosh`` is the full AdS form
    ``E_1h = mc^2 cosh(rho/ell)``, fitted in log space from the ``exp``
    estimate; it stays accurate down to the innermost layers.

    Args:
        rho: Radial coordinates.
        energy: Single-hologron energies.
        window: Inclusive radial window; all points when omitted.
        form: ``exp`` or ``cosh``.

    Returns:
        FitResult: ``inv_ell``, ``ell`` and ``mc2`` with uncertainties.

    Raises:
        FitDomainError: Fewer than four points, non-positive energies in the
            window, energies not growing with rho, or an unknown form.
    """
    if form not in SINGLE_PARTICLE_FORMS:
        raise FitDomainError(f"Unknown single-particle form '{form}' (expected one of {SINGLE_PARTICLE_FORMS})")
    x, y, window = _select(rho, energy, window)
    if x.size < const.MIN_SINGLE_PARTICLE_POINTS:
        raise FitDomainError(
            f"Single-particle fit needs at least {const.MIN_SINGLE_PARTICLE_POINTS} points, got {x.size}"
        )
    if np.any(y <= 0.0):
        raise FitDomainError("Non-positive single-hologron energy inside the fit window")

    design = np.column_stack([np.ones_like(x), x])
    coef, sig, resid = _linear_fit(design, np.log(y))
    intercept, slope = coef
    if slope <= 0.0:
        raise FitDomainError(f"Energies do not grow with rho (slope {slope:.3e})")
    mc2 = 2.0 * math.exp(intercept)
    mc2_sigma = mc2 * sig[0]

    if form == "cosh":
        (log_mc2, slope), (log_mc2_sigma, sig_slope), resid = _cosh_fit(x, np.log(y), math.log(mc2), slope)
        sig = [log_mc2_sigma, sig_slope]
        mc2 = math.exp(log_mc2)
        mc2_sigma = mc2 * log_mc2_sigma

    params = {"inv_ell": slope, "ell": 1.0 / slope, "mc2": mc2}
    sigmas = {"inv_ell": sig[1], "ell": sig[1] / slope ** 2, "mc2": mc2_sigma}
    model = "1p" if form == "exp" else "1p-cosh"
    logger.info(
        f"Single-particle fit ({form}): 1/ell={slope:.5f}({sig[1]:.1e}) mc^2={mc2:.5f}({mc2_sigma:.1e})"
    )
    return FitResult(model, params, sigmas, resid, window, int(x.size))


def fit_tail(
        separation: Sequence[float],
        collapsed: Sequence[float],
        ell: float,
        min_separation: float = float(const.TAIL_MIN_SEPARATION),
) -> FitResult:
    """
    Fit the collapsed radial tail ``C1 - C2 exp(-d/ell)`` with ``ell`` held fixed.

    Raises:
        ConditioningError: Ill-conditioned design matrix (e.g. a single separation).
    """
    x, y, window = _select(separation, collapsed, (min_separation, math.inf))
    design = np.column_stack([np.ones_like(x), -np.exp(-x / ell)])
    coef, sig, resid = _linear_fit(design, y)
    params = {"C1": coef[0], "C2": coef[1]}
    sigmas = {"C1": sig[0], "C2": sig[1]}
    logger.info(f"Tail fit: C1={coef[0]:.5f}({sig[0]:.1e}) C2={coef[1]:.5f}({sig[1]:.1e})")
    return FitResult("tail", params, sigmas, resid, window, int(x.size), {"ell": ell})


def w_design(separation: np.ndarray, ell: float) -> np.ndarray:
    """Design matrix of the W model, columns in the order A, B, C, D."""
    return np.column_stack([
        mult * np.exp(-expo * separation / ell) for _, mult, expo in const.W_MODEL_TERMS
    ])


def fit_w(
        separation: Sequence[float],
        collapsed: Sequence[float],
        ell: float,
        min_separation: float = 0.0,
) -> FitResult:
    """
    Fit the four-parameter W model with fixed exponents and multiplicities.

    Raises:
        ConditioningError: Ill-conditioned design matrix.
    """
    x, y, window = _select(separation, collapsed, (min_separation, math.inf))
    coef, sig, resid = _linear_fit(w_design(x, ell), y)
    names = [name for name, _, _ in const.W_MODEL_TERMS]
    params = dict(zip(names, coef))
    sigmas = dict(zip(names, sig))
    logger.info("W fit: " + ", ".join(f"{n}={params[n]:.4f}({sigmas[n]:.1e})" for n in names))
    return FitResult("W", params, sigmas, resid, window, int(x.size), {"ell": ell})


def fit_power_law(
        r: Sequence[float],
        correlation: Sequence[float],
        window: Optional[Tuple[float, float]] = None,
) -> FitResult:
    """
    Fit ``|C(r)| = a r^{-2 Delta}`` on a log-log scale.

    Raises:
        FitDomainError: Non-positive separations or vanishing correlations.
    """
    x, y, window = _select(r, correlation, window)
    y = np.abs(y)
    if np.any(x <= 0.0) or np.any(y == 0.0):
        raise FitDomainError("Power-law fit needs positive separations and non-zero correlations")
    design = np.column_stack([np.ones_like(x), np.log(x)])
    coef, sig, resid = _linear_fit(design, np.log(y))
    params = {"amplitude": math.exp(coef[0]), "exponent": -coef[1], "delta": -coef[1] / 2.0}
    sigmas = {"amplitude": params["amplitude"] * sig[0], "exponent": sig[1], "delta": sig[1] / 2.0}
    logger.info(f"Power-law fit: exponent={params['exponent']:.5f}({sig[1]:.1e})")
    return FitResult("power", params, sigmas, resid, window, int(x.size))


# -----------------------------------------------------------------------------
# PRIVATE HELPERS
# -----------------------------------------------------------------------------

def _select(
        x: Sequence[float],
        y: Sequence[float],
        window: Optional[Tuple[float, float]],
) -> Tuple[np.ndarray, np.ndarray, Tuple[float, float]]:
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    if xa.shape != ya.shape:
        raise FitDomainError(f"Abscissa and data lengths differ ({xa.size} vs {ya.size})")
    if window is None:
        window = (float(xa.min()), float(xa.max())) if xa.size else (0.0, 0.0)
    mask = (xa >= window[0]) & (xa <= window[1])
    if not np.all(np.isfinite(ya[mask])):
        raise FitDomainError("Non-finite data inside the fit window")
    hi = float(xa[mask].max()) if np.any(mask) else window[1]
    return xa[mask], ya[mask], (float(window[0]), hi)


def _linear_fit(design: np.ndarray, y: np.ndarray) -> Tuple[List[float], List[float], float]:
    n, p = design.shape
    if n < p:
        raise ConditioningError(f"{n} data points cannot determine {p} parameters")
    cond = np.linalg.cond(design)
    if not np.isfinite(cond) or cond > const.CONDITION_LIMIT:
        raise ConditioningError(f"Design matrix condition number {cond:.3e} exceeds the limit")

    coef, _, _, _ = la.lstsq(design, y)
    residual_vec = y - design @ coef
    residual = float(np.linalg.norm(residual_vec))
    dof = n - p
    if dof > 0:
        s2 = float(residual_vec @ residual_vec) / dof
        cov = s2 * la.inv(design.T @ design)
        sig = np.sqrt(np.clip(np.diag(cov), 0.0, None))
    else:
        sig = np.zeros(p)
    return [float(c) for c in coef], [float(s) for s in sig], residual


def _log_cosh_model(x: np.ndarray, log_mc2: float, inv_ell: float) -> np.ndarray:
    arg = inv_ell * x
    return log_mc2 + np.logaddexp(arg, -arg) - math.log(2.0)


def _cosh_fit(
        x: np.ndarray,
        log_y: np.ndarray,
        log_mc2: float,
        inv_ell: float,
) -> Tuple[Tuple[float, float], Tuple[float, float], float]:
    try:
        popt, pcov = curve_fit(
            _log_cosh_model, x, log_y, p0=(log_mc2, inv_ell), ftol=1e-14, xtol=1e-14, maxfev=2000
        )
    except RuntimeError as e:
        raise FitDomainError(f"cosh single-particle fit did not converge: {e}") from e
    if popt[1] <= 0.0:
        raise FitDomainError(f"cosh fit gives a non-positive inverse radius ({popt[1]:.3e})")
    residual = float(np.linalg.norm(log_y - _log_cosh_model(x, *popt)))
    sig = np.sqrt(np.clip(np.diag(pcov), 0.0, None))
    if not np.all(np.isfinite(sig)):
        sig = np.zeros(2)
    return (float(popt[0]), float(popt[1])), (float(sig[0]), float(sig[1])), residual
