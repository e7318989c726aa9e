from __future__ import annotations

from .context import RunContext
from .engine import run_experiment
from .experiments import EXPERIMENTS
from .validator import resolve_fit_window, resolve_rho_range, validate_config

__all__ = [
    "EXPERIMENTS",
    "RunContext",
    "resolve_fit_window",
    "resolve_rho_range",
    "run_experiment",
    "validate_config",
]
