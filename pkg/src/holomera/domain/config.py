from __future__ import annotations

"""
Experiment Configuration Domain.

Defines the default experiment configuration, loads user configuration
files (flat key = value text, JSON or TOML) and derives the stable
configuration hash that is stamped into every result artifact.
"""

import hashlib
import json
import logging
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib  # type: ignore[no-redef]
from typing import Any, Dict

from holomera.domain import constants as const
from holomera.domain.errors import ConfigError

logger = logging.getLogger(__name__)

# Keys that do not change numerical results and are excluded from the hash.
_NON_SEMANTIC_KEYS = frozenset({"threads", "output_dir", "output_prefix", "cache_dir"})


def get_default_config() -> Dict[str, Any]:
    """
    Generate the default experiment configuration.

    Returns:
        Dict[str, Any]: Default values for every recognized key.
    """
    return {
        # Network
        "depth": 8,
        "gauge": "canonical",
        "gauge_seed": 0,
        "gauge_theta": [0.0, 0.0, 0.0],
        "gauge_phi": 0.0,

        # Hologron sweeps
        "rho_min": None,
        "rho_max": None,
        "s_index": 0,
        "delta_s": 1,
        "hologron_mode": "radial",
        "n_gauges": 0,

        # Fits
        "fit_model": "1p",
        "fit_form": "cosh",
        "fit_rho_min": const.SINGLE_PARTICLE_RHO_MIN,
        "fit_rho_max": None,
        "fit_boundary_margin": const.BOUNDARY_LAYER_MARGIN,
        "tail_min_separation": const.TAIL_MIN_SEPARATION,
        "fit_input": "",

        # Spectra
        "k": 3,
        "variant": "average",
        "j": 0,
        "conjugator_offset": const.CONJUGATOR_OFFSET,

        # Correlators
        "corr_r_min": 8,
        "corr_r_max": 256,

        # Exact diagonalization
        "n_sites": 16,
        "overlap_exponent": const.PINNED_OVERLAP_EXPONENT,

        # Gravity predictions
        "ads_mass": 1.0,
        "ads_newton": 0.001,
        "ads_ell": const.DEFAULT_ELL_ADS,

        # Noise
        "noise_kind": "control",
        "noise_eps": [0.005, 0.006, 0.007],
        "noise_centered": False,
        "n_samples": 100,

        # Execution
        "seed": 0,
        "threads": 0,
        "output_dir": os.getcwd(),
        "output_prefix": const.DEFAULT_OUTPUT_PREFIX,
        "cache_dir": "",
    }


def load_config_file(path: str) -> Dict[str, Any]:
    """
    Load a configuration file.

    The native format is a flat ``key = value`` text file; ``#`` starts a
    comment and blank lines are ignored. Values are read as JSON literals
    where possible (numbers, booleans, lists) and as bare strings otherwise.
    ``.json`` and ``.toml`` files are also accepted; TOML keys may sit at the
    top level or under a [holomera] table.

    Args:
        path: Path to the configuration file.

    Returns:
        Dict[str, Any]: Raw (unvalidated) configuration values.

    Raises:
        ConfigError: If the file is missing, unreadable or malformed.
    """
    if not os.path.isfile(path):
        raise ConfigError(f"Configuration file not found: {path}")

    lowered = path.lower()
    try:
        if lowered.endswith(".toml"):
            with open(path, "rb") as fb:
                data: Any = tomllib.load(fb)
            if isinstance(data, dict) and isinstance(data.get(const.APP_NAME), dict):
                data = data[const.APP_NAME]
        elif lowered.endswith(".json"):
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        else:
            with open(path, "r", encoding="utf-8") as f:
                data = parse_key_values(f.read(), source=path)
    except (OSError, ValueError) as e:
        raise ConfigError(f"Failed to read configuration file '{path}': {e}") from e

    if not isinstance(data, dict):
        raise ConfigError(
            f"Invalid configuration file '{path}': expected mapping, "
            f"received {type(data).__name__}."
        )

    logger.debug(f"Loaded configuration file {path} ({len(data)} keys)")
    return data


def parse_key_values(text: str, source: str = "<string>") -> Dict[str, Any]:
    """Parse flat ``key = value`` lines."""
    data: Dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got '{raw.strip()}'")
        try:
            data[key] = json.loads(value)
        except ValueError:
            data[key] = value
    return data


def config_hash(config: Dict[str, Any]) -> str:
    """
    Compute the short stable hash of the semantic configuration keys.

    Args:
        config: Validated configuration.

    Returns:
        str: First 12 hex characters of the SHA-256 of the canonical JSON.
    """
    semantic = {k: v for k, v in config.items() if k not in _NON_SEMANTIC_KEYS}
    payload = json.dumps(semantic, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(payload).hexdigest()[:12]


def resolve_cache_dir(config: Dict[str, Any]) -> str:
    """Resolve the spectrum cache directory (config, then environment, then home)."""
    explicit = str(config.get("cache_dir") or "").strip()
    if explicit:
        return os.path.abspath(explicit)
    env = os.environ.get(const.CACHE_ENV_VAR, "").strip()
    if env:
        return os.path.abspath(env)
    return os.path.join(os.path.expanduser("~"), f".{const.APP_NAME}", "cache")
