from __future__ import annotations

from .collapse import collapse_quality, curve_from_pairs, family_spread, relative_spread
from .fitting import FitResult, fit_power_law, fit_single_particle, fit_tail, fit_w, w_design

__all__ = [
    "FitResult",
    "collapse_quality",
    "curve_from_pairs",
    "family_spread",
    "fit_power_law",
    "fit_single_particle",
    "fit_tail",
    "fit_w",
    "relative_spread",
    "w_design",
]
