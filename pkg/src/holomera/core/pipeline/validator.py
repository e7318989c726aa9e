from __future__ import annotations

"""
Configuration Validation Service.

Gatekeeper between untrusted input (CLI flags, config files) and the
numerical core. Coerces types, injects defaults and enforces the domain
ranges of every experiment parameter. Range violations always raise
ConfigError; type mismatches are coerced with a warning unless strict.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from holomera.domain import constants as const
from holomera.domain.config import get_default_config
from holomera.domain.errors import CapacityError, ConfigError
from holomera.infra.fs import normalize_path

logger = logging.getLogger(__name__)

GAUGE_CHOICES = ("canonical", "random", "explicit")
NOISE_KINDS = ("control", "dephasing")
VARIANT_CHOICES = ("average", "even", "odd", "single")
FIT_MODELS = ("1p", "tail", "W", "power")
FIT_FORMS = ("cosh", "exp")
HOLOGRON_MODES = ("radial", "angular")


# -----------------------------------------------------------------------------
# PUBLIC API
# -----------------------------------------------------------------------------

def validate_config(
        config: Any,
        *,
        strict: bool = False,
) -> Tuple[Dict[str, Any], List[str]]:
    """
    Validate and normalize an experiment configuration.

    Args:
        config: Raw configuration data (usually a dictionary).
        strict: If True, raises on type mismatch instead of coercing.

    Returns:
        Tuple[Dict[str, Any], List[str]]: Normalized configuration and warnings.

    Raises:
        ConfigError: On unknown keys (strict), invalid types (strict) or
            out-of-range values.
        CapacityError: If the requested depth exceeds the supported maximum.
    """
    warnings: List[str] = []
    defaults = get_default_config()

    # 1. Base Type Validation
    if not isinstance(config, dict):
        msg = f"Invalid config type: expected dict, received {type(config).__name__}."
        if strict:
            raise ConfigError(msg)
        warnings.append(f"{msg} Using defaults.")
        logger.warning(msg)
        config = {}

    unknown = sorted(set(config) - set(defaults))
    if unknown:
        msg = f"Unknown configuration keys: {', '.join(unknown)}."
        if strict:
            raise ConfigError(msg)
        warnings.append(f"{msg} Ignored.")

    merged: Dict[str, Any] = dict(defaults)
    merged.update({k: v for k, v in config.items() if k in defaults})

    # 2. Type Coercion
    int_fields = [
        "depth", "gauge_seed", "s_index", "delta_s", "n_gauges", "fit_rho_min", "fit_boundary_margin",
        "tail_min_separation", "k", "j", "corr_r_min", "corr_r_max", "n_sites",
        "overlap_exponent", "n_samples", "seed", "threads",
    ]
    optional_int_fields = ["rho_min", "rho_max", "fit_rho_max", "conjugator_offset"]
    str_fields = ["output_dir", "output_prefix", "cache_dir", "fit_input"]
    choice_fields = {
        "gauge": GAUGE_CHOICES,
        "noise_kind": NOISE_KINDS,
        "variant": VARIANT_CHOICES,
        "fit_model": FIT_MODELS,
        "fit_form": FIT_FORMS,
        "hologron_mode": HOLOGRON_MODES,
    }

    for field in int_fields:
        merged[field] = _as_int(merged.get(field), defaults[field], field, warnings, strict)
    for field in optional_int_fields:
        if merged.get(field) is not None:
            merged[field] = _as_int(merged[field], None, field, warnings, strict)
    for field in str_fields:
        merged[field] = _as_str(merged.get(field), defaults[field], field, warnings, strict)
    for field, choices in choice_fields.items():
        merged[field] = _as_choice(merged.get(field), choices, field)

    merged["noise_centered"] = _as_bool(
        merged.get("noise_centered"), False, "noise_centered", warnings, strict
    )
    merged["gauge_phi"] = _as_float(merged.get("gauge_phi"), 0.0, "gauge_phi", warnings, strict)
    for field in ("ads_mass", "ads_newton", "ads_ell"):
        merged[field] = _as_float(merged.get(field), defaults[field], field, warnings, strict)
    merged["gauge_theta"] = _as_float_list(
        merged.get("gauge_theta"), [0.0, 0.0, 0.0], "gauge_theta", warnings, strict
    )
    merged["noise_eps"] = _as_float_list(
        merged.get("noise_eps"), defaults["noise_eps"], "noise_eps", warnings, strict
    )

    # 3. Domain Ranges
    _check_ranges(merged)

    merged["output_dir"] = normalize_path(merged["output_dir"], defaults["output_dir"])
    return merged, warnings


def resolve_rho_range(config: Dict[str, Any]) -> Tuple[int, int]:
    """Resolve the hologron radial range, defaulting to [2, D-1]."""
    depth = config["depth"]
    lo = config["rho_min"] if config["rho_min"] is not None else 2
    hi = config["rho_max"] if config["rho_max"] is not None else depth - 1
    return lo, hi


def resolve_fit_window(config: Dict[str, Any], data_rho_max: Optional[int] = None) -> Tuple[int, int]:
    """
    Resolve the single-particle fit window.

    The default upper end stays ``fit_boundary_margin`` layers inside the
    outermost radius (``D-1``, or the largest radius in the data), widened
    to keep four points when the network is shallow.
    """
    lo = config["fit_rho_min"]
    if config["fit_rho_max"] is not None:
        return lo, config["fit_rho_max"]
    outer = data_rho_max if data_rho_max is not None else config["depth"] - 1
    hi = max(outer - config["fit_boundary_margin"], lo + const.MIN_SINGLE_PARTICLE_POINTS - 1)
    return lo, min(hi, outer)


# -----------------------------------------------------------------------------
# PRIVATE HELPERS: RANGE CHECKS
# -----------------------------------------------------------------------------

def _check_ranges(cfg: Dict[str, Any]) -> None:
    depth = cfg["depth"]
    if depth < const.MIN_DEPTH:
        raise ConfigError(f"Invalid field 'depth': must be >= {const.MIN_DEPTH}, got {depth}.")
    if depth > const.MAX_DEPTH:
        raise CapacityError(f"Depth {depth} exceeds the supported maximum {const.MAX_DEPTH}.")

    lo, hi = resolve_rho_range(cfg)
    if not (2 <= lo <= hi <= depth - 1):
        raise ConfigError(
            f"Invalid radial range [{lo}, {hi}]: must satisfy 2 <= rho_min <= rho_max <= D-1."
        )

    if not (0 <= cfg["s_index"] < 2 ** lo):
        raise ConfigError(
            f"Invalid field 's_index': must lie in [0, {2 ** lo}) at rho={lo}."
        )
    if cfg["delta_s"] < 1:
        raise ConfigError("Invalid field 'delta_s': must be >= 1.")

    k = cfg["k"]
    if not (const.MIN_SUPEROPERATOR_K <= k <= const.MAX_SUPEROPERATOR_K):
        raise ConfigError(
            f"Invalid field 'k': must lie in [{const.MIN_SUPEROPERATOR_K}, "
            f"{const.MAX_SUPEROPERATOR_K}], got {k}."
        )
    if cfg["variant"] == "single" and not (0 <= cfg["j"] <= k - 2):
        raise ConfigError(f"Invalid field 'j': must lie in [0, {k - 2}] for k={k}.")

    if cfg["n_sites"] < 4 or cfg["n_sites"] % 2:
        raise ConfigError("Invalid field 'n_sites': must be an even integer >= 4.")
    if cfg["n_sites"] > const.MAX_ITERATIVE_SITES:
        raise CapacityError(
            f"n_sites={cfg['n_sites']} exceeds the exact-diagonalization limit "
            f"{const.MAX_ITERATIVE_SITES}."
        )

    if cfg["overlap_exponent"] not in (1, 2):
        raise ConfigError("Invalid field 'overlap_exponent': must be 1 or 2.")
    offset = cfg["conjugator_offset"]
    if offset is not None and not (0 <= offset <= max(k, const.MIN_STRESS_K) - 4):
        raise ConfigError(
            f"Invalid field 'conjugator_offset': must lie in [0, {max(k, const.MIN_STRESS_K) - 4}] or be null."
        )

    for eps in cfg["noise_eps"]:
        if not (0.0 <= eps < 1.0):
            raise ConfigError(f"Invalid noise strength {eps}: must lie in [0, 1).")

    if cfg["n_samples"] < 1:
        raise ConfigError("Invalid field 'n_samples': must be >= 1.")
    if cfg["n_gauges"] < 0:
        raise ConfigError("Invalid field 'n_gauges': must be >= 0 (0 = no gauge sweep).")
    for field in ("seed", "gauge_seed"):
        if cfg[field] < 0:
            raise ConfigError(f"Invalid field '{field}': must be >= 0.")
    if cfg["ads_ell"] <= 0.0 or cfg["ads_mass"] < 0.0 or cfg["ads_newton"] < 0.0:
        raise ConfigError("Invalid gravity parameters: need ads_ell > 0, ads_mass >= 0, ads_newton >= 0.")
    if cfg["threads"] < 0:
        raise ConfigError("Invalid field 'threads': must be >= 0 (0 = automatic).")
    if cfg["tail_min_separation"] < 1:
        raise ConfigError("Invalid field 'tail_min_separation': must be >= 1.")
    if cfg["fit_boundary_margin"] < 0:
        raise ConfigError("Invalid field 'fit_boundary_margin': must be >= 0.")
    if not (1 <= cfg["corr_r_min"] <= cfg["corr_r_max"]):
        raise ConfigError("Invalid correlator range: need 1 <= corr_r_min <= corr_r_max.")
    if len(cfg["gauge_theta"]) != 3:
        raise ConfigError("Invalid field 'gauge_theta': expected three components.")


# -----------------------------------------------------------------------------
# PRIVATE HELPERS: TYPE COERCION
# -----------------------------------------------------------------------------

def _as_int(
        value: Any, fallback: Optional[int], field: str, warnings: List[str], strict: bool
) -> Any:
    """Coerce integers, accepting integral floats and numeric strings when lenient."""
    if value is None:
        return fallback
    if isinstance(value, bool):
        pass
    elif isinstance(value, int):
        return value
    elif not strict:
        try:
            as_float = float(value)
        except (TypeError, ValueError):
            as_float = float("nan")
        if as_float.is_integer():
            warnings.append(f"Field '{field}' converted from {value!r} to int.")
            return int(as_float)

    msg = f"Invalid field '{field}': expected int, received {type(value).__name__}."
    if strict:
        raise ConfigError(msg)
    if fallback is None:
        raise ConfigError(msg)
    warnings.append(f"{msg} Using fallback.")
    return fallback


def _as_float(value: Any, fallback: float, field: str, warnings: List[str], strict: bool) -> float:
    if value is None:
        return fallback
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    if isinstance(value, str) and not strict:
        try:
            out = float(value)
            warnings.append(f"Field '{field}' converted from '{value}' to float.")
            return out
        except ValueError:
            pass

    msg = f"Invalid field '{field}': expected float, received {type(value).__name__}."
    if strict:
        raise ConfigError(msg)
    warnings.append(f"{msg} Using fallback.")
    return fallback


def _as_float_list(
        value: Any,
        fallback: Sequence[float],
        field: str,
        warnings: List[str],
        strict: bool,
) -> List[float]:
    """Accept a list of numbers, a single number or (lenient) a CSV string."""
    if value is None:
        return list(fallback)
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return [float(value)]
    if isinstance(value, str) and not strict:
        items = [x.strip() for x in value.split(",") if x.strip()]
        try:
            out = [float(x) for x in items]
        except ValueError:
            raise ConfigError(f"Invalid field '{field}': cannot parse '{value}'.")
        warnings.append(f"Field '{field}' converted from CSV string to list.")
        return out if out else list(fallback)
    if isinstance(value, (list, tuple)):
        out = []
        for i, item in enumerate(value):
            if isinstance(item, (int, float)) and not isinstance(item, bool):
                out.append(float(item))
            else:
                raise ConfigError(f"Invalid item in '{field}[{i}]': expected float.")
        return out

    msg = f"Invalid field '{field}': expected list[float], received {type(value).__name__}."
    if strict:
        raise ConfigError(msg)
    warnings.append(f"{msg} Using fallback.")
    return list(fallback)


def _as_str(value: Any, fallback: str, field: str, warnings: List[str], strict: bool) -> str:
    if value is None:
        return fallback
    if isinstance(value, str):
        v = value.strip()
        return v if v else fallback

    msg = f"Invalid field '{field}': expected str, received {type(value).__name__}."
    if strict:
        raise ConfigError(msg)
    warnings.append(f"{msg} Using fallback.")
    return fallback


def _as_bool(value: Any, fallback: bool, field: str, warnings: List[str], strict: bool) -> bool:
    if isinstance(value, bool):
        return value
    if value is None:
        return fallback

    if not strict:
        if isinstance(value, (int, float)) and value in (0, 1):
            warnings.append(f"Field '{field}' converted from number {value} to bool.")
            return bool(value)
        if isinstance(value, str):
            s = value.strip().lower()
            if s in ("true", "1", "yes", "y"):
                warnings.append(f"Field '{field}' converted from '{value}' to True.")
                return True
            if s in ("false", "0", "no", "n"):
                warnings.append(f"Field '{field}' converted from '{value}' to False.")
                return False

    msg = f"Invalid field '{field}': expected bool, received {type(value).__name__}."
    if strict:
        raise ConfigError(msg)
    warnings.append(f"{msg} Using fallback.")
    return fallback


def _as_choice(value: Any, choices: Sequence[str], field: str) -> str:
    """Enumerated fields never fall back silently."""
    if isinstance(value, str) and value.strip() in choices:
        return value.strip()
    raise ConfigError(
        f"Invalid field '{field}': expected one of {', '.join(choices)}, received {value!r}."
    )
