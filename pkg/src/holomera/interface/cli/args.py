from __future__ import annotations

"""
CLI Argument Definition and Mapping.

Defines one subparser per experiment and translates the parsed namespace
into configuration overrides. Flags left unset map to nothing, so the
config file and defaults stay in charge.
"""

import argparse
from typing import Any, Dict, List, Optional

from holomera.domain.constants import __version__
from holomera.domain.errors import ConfigError

COMMANDS = (
    "gs-energy",
    "correlators",
    "spectrum",
    "hologron-1",
    "hologron-2",
    "collapse",
    "fit",
    "ads-predict",
    "noise-sweep",
    "verify-ed",
)

# (dest, config key) pairs copied verbatim when set
_DIRECT_KEYS = (
    ("depth", "depth"),
    ("gauge", "gauge"),
    ("gauge_seed", "gauge_seed"),
    ("gauge_phi", "gauge_phi"),
    ("s_index", "s_index"),
    ("seed", "seed"),
    ("threads", "threads"),
    ("output_dir", "output_dir"),
    ("output_prefix", "output_prefix"),
    ("cache_dir", "cache_dir"),
    ("k", "k"),
    ("variant", "variant"),
    ("j", "j"),
    ("conjugator_offset", "conjugator_offset"),
    ("mode", "hologron_mode"),
    ("delta_s", "delta_s"),
    ("gauges", "n_gauges"),
    ("model", "fit_model"),
    ("fit_input", "fit_input"),
    ("fit_rho_min", "fit_rho_min"),
    ("fit_rho_max", "fit_rho_max"),
    ("fit_form", "fit_form"),
    ("fit_boundary_margin", "fit_boundary_margin"),
    ("tail_min_separation", "tail_min_separation"),
    ("ads_mass", "ads_mass"),
    ("ads_newton", "ads_newton"),
    ("ads_ell", "ads_ell"),
    ("noise_kind", "noise_kind"),
    ("n_samples", "n_samples"),
    ("n_sites", "n_sites"),
    ("overlap_exponent", "overlap_exponent"),
    ("corr_r_min", "corr_r_min"),
    ("corr_r_max", "corr_r_max"),
)


# -----------------------------------------------------------------------------
# ARGUMENT DEFINITION
# -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    """
    Construct the argument parser for the holomera CLI.

    Returns:
        argparse.ArgumentParser: Configured parser instance.
    """
    p = argparse.ArgumentParser(
        prog="holomera",
        description="Exact wavelet MERA toy model of AdS/CFT: hologron energetics vs AdS3 gravity.",
    )
    p.add_argument("--version", action="version", version=f"holomera {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    common = _common_parser()

    sub.add_parser("gs-energy", parents=[common], help="Ground energy, density and ED overlap.")

    corr = sub.add_parser("correlators", parents=[common], help="Two-point functions on dyadic separations.")
    corr.add_argument("--r-min", dest="corr_r_min", type=int, default=None)
    corr.add_argument("--r-max", dest="corr_r_max", type=int, default=None)

    spectrum = sub.add_parser("spectrum", parents=[common], help="Scaling dimensions of an ascending superoperator.")
    spectrum.add_argument("--k", type=int, default=None, help="Support size (3-6).")
    spectrum.add_argument("--variant", choices=("average", "even", "odd", "single"), default=None)
    spectrum.add_argument("--j", type=int, default=None, help="Window index of the single variant.")
    spectrum.add_argument(
        "--conjugator-offset", dest="conjugator_offset", type=int, default=None,
        help="First window site of the hologron conjugator.",
    )
    spectrum.add_argument(
        "--average-conjugator", action="store_true", help="Average the conjugator over every placement."
    )

    sub.add_parser("hologron-1", parents=[common], help="Single-hologron energies along a radial line.")

    h2 = sub.add_parser("hologron-2", parents=[common], help="Two-hologron interaction potential.")
    h2.add_argument("--mode", choices=("radial", "angular"), default=None)
    h2.add_argument("--ds", dest="delta_s", type=int, default=None, help="Angular separation.")

    col = sub.add_parser("collapse", parents=[common], help="Collapsed radial potential.")
    col.add_argument("--gauges", type=int, default=None, help="Number of random gauges to sweep.")

    fit = sub.add_parser("fit", parents=[common], help="Fit a model to a previous CSV artifact.")
    fit.add_argument("--model", choices=("1p", "tail", "W", "power"), default=None)
    fit.add_argument("--input", dest="fit_input", default=None, help="CSV to fit (default: matching artifact).")
    fit.add_argument("--rho-min", dest="fit_rho_min", type=int, default=None)
    fit.add_argument("--rho-max", dest="fit_rho_max", type=int, default=None)
    fit.add_argument("--form", dest="fit_form", choices=("cosh", "exp"), default=None, help="Single-particle form.")
    fit.add_argument(
        "--boundary-margin", dest="fit_boundary_margin", type=int, default=None,
        help="Outer layers left out of the single-particle fit.",
    )
    fit.add_argument("--min-sep", dest="tail_min_separation", type=int, default=None)

    ads = sub.add_parser("ads-predict", parents=[common], help="Closed-form AdS3 prediction curves.")
    ads.add_argument("--mass", dest="ads_mass", type=float, default=None)
    ads.add_argument("--newton", dest="ads_newton", type=float, default=None)
    ads.add_argument("--ell", dest="ads_ell", type=float, default=None)

    noise = sub.add_parser("noise-sweep", parents=[common], help="Monte-Carlo noisy radial potentials.")
    noise.add_argument("--kind", dest="noise_kind", choices=("control", "dephasing"), default=None)
    noise.add_argument("--eps", default=None, help="Comma-separated noise strengths.")
    noise.add_argument("--samples", dest="n_samples", type=int, default=None)
    noise.add_argument("--centered", action="store_true", help="Zero-centered control angles.")

    ved = sub.add_parser("verify-ed", parents=[common], help="Engine vs dense statevector cross-check.")
    ved.add_argument("--n", dest="n_sites", type=int, default=None)
    ved.add_argument("--overlap-exponent", dest="overlap_exponent", type=int, default=None)

    return p


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)

    # --- Configuration Sources ---
    common.add_argument("-c", "--config", dest="config_file", default=None, help="Flat key = value config file.")
    common.add_argument("--strict", action="store_true", help="Reject unknown keys and type mismatches.")
    common.add_argument("--dump-config", action="store_true", help="Print the validated config and exit.")

    # --- Network ---
    common.add_argument("--d", "--depth", dest="depth", type=int, default=None, help="Number of scales D.")
    common.add_argument("--gauge", choices=("canonical", "random", "explicit"), default=None)
    common.add_argument("--gauge-seed", dest="gauge_seed", type=int, default=None)
    common.add_argument("--gauge-theta", dest="gauge_theta", default=None, help="Three comma-separated angles.")
    common.add_argument("--gauge-phi", dest="gauge_phi", type=float, default=None)
    common.add_argument("--rho-range", dest="rho_range", default=None, help="Inclusive radial range 'lo,hi'.")
    common.add_argument("--s", dest="s_index", type=int, default=None, help="Angular index at the innermost radius.")

    # --- Execution ---
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("-o", "--output-dir", dest="output_dir", default=None)
    common.add_argument("--prefix", dest="output_prefix", default=None)
    common.add_argument("--cache-dir", dest="cache_dir", default=None)

    # --- Diagnostics ---
    common.add_argument("--debug", action="store_true", help="Elevate logging verbosity to DEBUG.")
    common.add_argument("--json", dest="json_output", action="store_true", help="Print the result as JSON.")
    return common


# -----------------------------------------------------------------------------
# ARGUMENT MAPPING
# -----------------------------------------------------------------------------

def args_to_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """
    Translate the argparse Namespace into configuration overrides.

    Args:
        args: Parsed command-line arguments.

    Returns:
        Dict[str, Any]: Only the keys the user actually set.
    """
    overrides: Dict[str, Any] = {}
    for dest, key in _DIRECT_KEYS:
        value = getattr(args, dest, None)
        if value is not None:
            overrides[key] = value

    if args.rho_range:
        lo, hi = _split_ints(args.rho_range, "--rho-range", 2)
        overrides["rho_min"], overrides["rho_max"] = lo, hi
    if args.gauge_theta:
        overrides["gauge_theta"] = _split_floats(args.gauge_theta)

    if getattr(args, "eps", None):
        overrides["noise_eps"] = _split_floats(args.eps)
    if getattr(args, "centered", False):
        overrides["noise_centered"] = True
    if getattr(args, "average_conjugator", False):
        overrides["conjugator_offset"] = None
    if args.command == "hologron-2" and args.mode is None and "delta_s" in overrides:
        overrides["hologron_mode"] = "angular"

    return overrides


# -----------------------------------------------------------------------------
# HELPERS
# -----------------------------------------------------------------------------

def _split_floats(value: str) -> List[float]:
    try:
        return [float(x) for x in _split_csv(value) or []]
    except ValueError:
        raise ConfigError(f"Expected comma-separated numbers, got '{value}'")


def _split_ints(value: str, flag: str, count: Optional[int] = None) -> List[int]:
    try:
        out = [int(x) for x in _split_csv(value) or []]
    except ValueError:
        raise ConfigError(f"{flag}: expected comma-separated integers, got '{value}'")
    if count is not None and len(out) != count:
        raise ConfigError(f"{flag}: expected {count} values, got {len(out)}")
    return out


def _split_csv(value: Optional[str]) -> Optional[List[str]]:
    """
    Convert a comma-separated string into a list of sanitized strings.
    """
    if value is None:
        return None
    parts = [x.strip() for x in value.split(",")]
    return [x for x in parts if x]
