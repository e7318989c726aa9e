from __future__ import annotations

"""
Experiment Runners.

One runner per CLI subcommand. Each runner takes a RunContext, writes its
artifacts through it and returns the summary dictionary reported to the
user. Runners raise library errors; the orchestrator maps them onto exit
codes.
"""

import json
import logging
import math
import os
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from holomera.core.analysis import (
    collapse_quality,
    fit_power_law,
    fit_single_particle,
    fit_tail,
    fit_w,
)
from holomera.core.engine import excitation_energy, ground_energy, ground_energy_ascending, two_point
from holomera.core.gravity import AdSParams, ads_prediction_curves, angular_bracket_root
from holomera.core.hologrons import (
    angular_potential,
    collapse,
    collapse_family,
    gauge_sweep,
    radial_pairs,
    radial_potential,
    radial_profile,
)
from holomera.core.lattice import build_dense, energy_density_tensor, epsilon_proxy, prefactor, sigma_proxy
from holomera.core.network.core_state import overlap_density, overlap_with_ed, reference_overlap_match
from holomera.core.network.mera import BulkCoordinate
from holomera.core.network.serialization import network_to_dict
from holomera.core.network.statevector import boundary_vector
from holomera.core.noise import NoiseModel, noisy_potential
from holomera.core.pipeline.context import RunContext
from holomera.core.pipeline.validator import resolve_fit_window, resolve_rho_range
from holomera.core.spectra import (
    SpectrumCache,
    coefficient_table,
    collapsed_analytic_potential,
    eigendecompose,
    extract_stress_and_descendants,
    identity_residual_curve,
    labeled_summary,
    spectrum_rows,
    thermodynamic_energy_density,
)
from holomera.domain import constants as const
from holomera.domain.config import resolve_cache_dir
from holomera.domain.errors import (
    AlignmentError,
    CapacityError,
    ConditioningError,
    ConfigError,
    DegeneracyError,
    FitDomainError,
    NumericalCheckError,
)
from holomera.infra.writers import read_csv

logger = logging.getLogger(__name__)

Runner = Callable[[RunContext], Dict[str, Any]]

VERIFY_TOL = 1e-9
IDENTITY_RESIDUAL_STEPS = 10


# -----------------------------------------------------------------------------
# GROUND STATE
# -----------------------------------------------------------------------------

def run_gs_energy(ctx: RunContext) -> Dict[str, Any]:
    """Ground energy by descent and ascension, density and (N <= 16) ED overlap."""
    net = ctx.network()
    n = net.n_sites
    e_desc = ground_energy(net)
    e_asc = ground_energy_ascending(net)
    summary: Dict[str, Any] = {
        "depth": net.depth,
        "N": n,
        "energy": e_desc,
        "energy_ascending": e_asc,
        "energy_density": e_desc / prefactor(n) / n,
        "thermodynamic_density": thermodynamic_energy_density(),
        "reference_density": const.REFERENCE_MERA_ENERGY_DENSITY,
        "ed_thermodynamic_density": const.REFERENCE_ED_ENERGY_DENSITY,
    }
    if abs(e_desc - e_asc) > VERIFY_TOL * max(1.0, abs(e_desc)):
        raise NumericalCheckError(f"Descent and ascension energies differ: {e_desc!r} vs {e_asc!r}")

    if n <= const.MAX_DENSE_SITES:
        overlap = overlap_with_ed(net)
        summary["overlap"] = overlap
        summary["overlap_exponent"] = ctx.cfg["overlap_exponent"]
        summary["overlap_density"] = overlap_density(overlap, n, ctx.cfg["overlap_exponent"])
        summary.update(reference_overlap_match(summary["overlap_density"], n))

    ctx.write_json("network", network_to_dict(net))
    ctx.write_json("gs_energy", summary)
    return summary


def run_correlators(ctx: RunContext) -> Dict[str, Any]:
    """Connected two-point functions of the spin and energy proxies on dyadic separations."""
    net = ctx.network()
    n = net.n_sites
    hi = min(ctx.cfg["corr_r_max"], n // 2)
    rs = [2 ** j for j in range(int(math.log2(n)) + 1) if ctx.cfg["corr_r_min"] <= 2 ** j <= hi]
    if not rs:
        raise ConfigError(f"No dyadic separation in [{ctx.cfg['corr_r_min']}, {hi}] for N={n}")

    sigma, eps = sigma_proxy(), epsilon_proxy()
    rows: List[Dict[str, Any]] = []
    for r in rs:
        c_eps = two_point(net, eps, eps, r) if r >= 3 else None
        rows.append({"r": r, "C_sigma": two_point(net, sigma, sigma, r), "C_epsilon": c_eps})
    ctx.write_csv("correlators", rows)

    fits: Dict[str, Any] = {}
    for column in ("C_sigma", "C_epsilon"):
        pts = [(row["r"], row[column]) for row in rows if row[column] is not None]
        try:
            result = fit_power_law([p[0] for p in pts], [p[1] for p in pts])
            fits[column] = result.to_dict()
        except (FitDomainError, ConditioningError) as e:
            logger.warning(f"Power-law fit of {column} skipped: {e}")
            fits[column] = None
    summary = {"N": n, "separations": rs, "fits": fits}
    ctx.write_json("correlators_fit", summary)
    return summary


# -----------------------------------------------------------------------------
# SPECTRA
# -----------------------------------------------------------------------------

def run_spectrum(ctx: RunContext) -> Dict[str, Any]:
    """Scaling dimensions of a k-site superoperator; coefficients for k >= 5."""
    k, variant = ctx.cfg["k"], ctx.cfg["variant"]
    j = ctx.cfg["j"] if variant == "single" else None
    cache = SpectrumCache(resolve_cache_dir(ctx.cfg))
    op = cache.superoperator(k, variant, None, j)
    spectrum = eigendecompose(op)
    ctx.write_csv(f"spectrum_k{k}_{variant}", spectrum_rows(spectrum))

    summary: Dict[str, Any] = {
        "k": k,
        "variant": variant,
        "label": op.label,
        "unitality_residual": op.unitality_residual(),
        "biorthonormality_residual": spectrum.biorthonormality_residual(),
        "groups": [{"delta": g.delta, "multiplicity": g.multiplicity} for g in spectrum.groups()],
    }
    if k == 3:
        summary["identity_residuals"] = identity_residual_curve(
            energy_density_tensor(), IDENTITY_RESIDUAL_STEPS, op
        )
    if k >= 5:
        summary["coefficients"] = _coefficients(ctx, spectrum)

    ctx.write_json(f"spectrum_k{k}_{variant}", summary)
    return summary


def _coefficients(ctx: RunContext, spectrum: Any) -> Optional[Dict[str, Any]]:
    try:
        stress = extract_stress_and_descendants(spectrum)
    except DegeneracyError as e:
        logger.warning(f"Stress-tensor labeling failed; coefficients skipped: {e}")
        return None
    table = coefficient_table(spectrum, stress, conjugator_offset=ctx.cfg["conjugator_offset"])
    ell = ctx.cfg["ads_ell"]
    overlay = [
        {"separation": d, "V_collapsed_analytic": collapsed_analytic_potential(table, d, ell)}
        for d in range(1, ctx.cfg["depth"] - 2)
    ]
    ctx.write_csv(f"analytic_potential_k{spectrum.k}", overlay)
    return {
        **labeled_summary(table),
        "conjugator_offset": table.conjugator_offset,
        "grouped": [
            {"delta": g.delta, "multiplicity": g.multiplicity, "value": g.value} for g in table.grouped
        ],
    }


# -----------------------------------------------------------------------------
# HOLOGRONS
# -----------------------------------------------------------------------------

def run_hologron_1(ctx: RunContext) -> Dict[str, Any]:
    """Single-hologron energies along one radial lineage."""
    net = ctx.network()
    lo, _ = resolve_rho_range(ctx.cfg)
    rows = radial_profile(net, s0=ctx.cfg["s_index"], rho0=lo, threads=ctx.threads)
    rows = [{"N": net.n_sites, **row} for row in rows]
    ctx.write_csv("hologron1", rows)
    return {"N": net.n_sites, "n_points": len(rows), "energies": {r["rho"]: r["energy"] for r in rows}}


def run_hologron_2(ctx: RunContext) -> Dict[str, Any]:
    """Two-hologron potential, radial or angular."""
    net = ctx.network()
    mode = ctx.cfg["hologron_mode"]
    lo, hi = resolve_rho_range(ctx.cfg)
    if mode == "radial":
        curve = radial_potential(net, (lo, hi), ctx.cfg["s_index"], threads=ctx.threads)
    else:
        curve = angular_potential(
            net, range(lo, hi + 1), ctx.cfg["delta_s"], ctx.cfg["s_index"], threads=ctx.threads
        )
    ctx.write_csv(f"hologron2_{mode}", curve.rows())

    summary: Dict[str, Any] = {"N": net.n_sites, "mode": mode, "n_pairs": len(curve.points)}
    summary["collapse_quality"] = _family_quality(*collapse_family(curve))
    if mode == "angular":
        summary["all_zero"] = bool(np.all(curve.interactions() == 0.0))
    return summary


def run_collapse(ctx: RunContext) -> Dict[str, Any]:
    """Collapsed radial potential, optionally over an ensemble of random gauges."""
    net = ctx.network(canonical=True)
    rho_range = resolve_rho_range(ctx.cfg)
    curve = radial_potential(net, rho_range, ctx.cfg["s_index"], threads=ctx.threads)
    rows = [{"gauge_id": 0, "separation": s, "V_collapsed": v} for s, v in collapse(curve)]
    summary: Dict[str, Any] = {
        "N": net.n_sites,
        "collapse_quality": _family_quality(*collapse_family(curve)),
    }

    n_gauges = ctx.cfg["n_gauges"]
    if n_gauges > 0:
        sweep = gauge_sweep(net, n_gauges, ctx.cfg["gauge_seed"], rho_range, ctx.cfg["s_index"], ctx.threads)
        for g, series in enumerate(sweep.collapsed, start=1):
            rows.extend({"gauge_id": g, "separation": s, "V_collapsed": v} for s, v in series)
        ctx.write_csv("collapse_gauge_mean", [
            {"separation": s, "V_collapsed_mean": v} for s, v in sweep.averaged
        ])
        summary.update({
            "n_gauges": sweep.n_gauges,
            "non_monotone": sweep.non_monotone,
            "gauge_mean_attractive": all(v < 0.0 for _, v in sweep.averaged),
        })

    ctx.write_csv("collapse", rows)
    ctx.write_json("collapse", summary)
    return summary


def _family_quality(raw: List[Dict[float, float]], normalized: List[Dict[float, float]]) -> Optional[float]:
    try:
        return collapse_quality(raw, normalized)
    except AlignmentError as e:
        logger.warning(f"Collapse quality not available: {e}")
        return None


# -----------------------------------------------------------------------------
# FITS
# -----------------------------------------------------------------------------

_DEFAULT_FIT_INPUTS = {
    "1p": "hologron1",
    "tail": "hologron2_radial",
    "W": "hologron2_radial",
    "power": "correlators",
}


def run_fit(ctx: RunContext) -> Dict[str, Any]:
    """Fit a model to a CSV artifact of a previous run."""
    model = ctx.cfg["fit_model"]
    path = ctx.cfg["fit_input"] or ctx.artifact_path(_DEFAULT_FIT_INPUTS[model], "csv")
    if not os.path.isfile(path):
        raise ConfigError(f"Fit input not found: {path}")
    rows = read_csv(path)
    if not rows:
        raise FitDomainError(f"Fit input {path} holds no data")

    if model == "1p":
        rho = np.array([r["rho"] for r in rows])
        energy = [r["energy"] for r in rows]
        lo, hi = resolve_fit_window(ctx.cfg, int(rho.max()))
        result = fit_single_particle(rho, energy, (float(lo), float(hi)), form=ctx.cfg["fit_form"])
    elif model == "power":
        result = fit_power_law([r["r"] for r in rows], [r["C_sigma"] for r in rows])
    else:
        ell, ell_source = _fixed_ell(ctx)
        sep = [r["separation"] for r in rows]
        collapsed = [r["V_collapsed"] for r in rows]
        if model == "tail":
            result = fit_tail(sep, collapsed, ell, float(ctx.cfg["tail_min_separation"]))
        else:
            result = fit_w(sep, collapsed, ell)
        logger.info(f"Fit uses ell={ell:.6f} from {ell_source}")

    payload = {"input": path, **result.to_dict()}
    ctx.write_json(f"fit_{model}", payload)
    return payload


def _fixed_ell(ctx: RunContext) -> Tuple[float, str]:
    """AdS radius of the single-particle fit if one was written, the configured value otherwise."""
    path = ctx.artifact_path("fit_1p", "json")
    if os.path.isfile(path):
        with open(path, "r", encoding="utf-8") as f:
            ell = json.load(f).get("params", {}).get("ell")
        if ell:
            return float(ell), path
    return float(ctx.cfg["ads_ell"]), "configuration"


# -----------------------------------------------------------------------------
# GRAVITY
# -----------------------------------------------------------------------------

def run_ads_predict(ctx: RunContext) -> Dict[str, Any]:
    """Tabulate the closed-form AdS3 predictions on the radial grid of the network."""
    params = AdSParams(ell=ctx.cfg["ads_ell"], m=ctx.cfg["ads_mass"], G=ctx.cfg["ads_newton"])
    lo, _ = resolve_rho_range(ctx.cfg)
    curves = ads_prediction_curves(params, ctx.cfg["depth"], lo)
    for name, rows in curves.items():
        ctx.write_csv(f"ads_{name}", rows)
    summary = {
        "ell": params.ell,
        "m": params.m,
        "G": params.G,
        "c": params.c,
        "rho_fixed": lo,
        "angular_bracket_root": angular_bracket_root(),
    }
    ctx.write_json("ads_predict", summary)
    return summary


# -----------------------------------------------------------------------------
# NOISE
# -----------------------------------------------------------------------------

def run_noise_sweep(ctx: RunContext) -> Dict[str, Any]:
    """Monte-Carlo noisy radial potentials for every configured noise strength."""
    net = ctx.network()
    pairs = radial_pairs(net.depth, resolve_rho_range(ctx.cfg), ctx.cfg["s_index"])
    rows: List[Dict[str, Any]] = []
    per_eps: List[Dict[str, Any]] = []
    for eps in ctx.cfg["noise_eps"]:
        noise = NoiseModel(ctx.cfg["noise_kind"], eps, ctx.seed, ctx.cfg["noise_centered"])
        result = noisy_potential(net, noise, pairs, ctx.cfg["n_samples"], threads=ctx.threads)
        rows.extend({"N": net.n_sites, **row} for row in result.rows())
        per_eps.append({
            "eps": eps,
            "fidelity": result.fidelity,
            "n_samples": result.n_samples,
            "collapse_quality": _family_quality(*result.family()),
        })
    ctx.write_csv(f"noise_{ctx.cfg['noise_kind']}", rows)
    summary = {"kind": ctx.cfg["noise_kind"], "N": net.n_sites, "sweep": per_eps}
    ctx.write_json(f"noise_{ctx.cfg['noise_kind']}", summary)
    return summary


# -----------------------------------------------------------------------------
# CROSS-CHECK
# -----------------------------------------------------------------------------

def run_verify_ed(ctx: RunContext) -> Dict[str, Any]:
    """
    Compare every engine energy with the dense statevector oracle.

    Raises:
        CapacityError: ``N > 16``.
        NumericalCheckError: Any deviation above ``1e-9``.
    """
    n = ctx.cfg["n_sites"]
    if n > const.MAX_DENSE_SITES:
        raise CapacityError(f"verify-ed supports N <= {const.MAX_DENSE_SITES}, got {n}")
    depth = int(round(math.log2(n)))
    if 2 ** depth != n or depth < const.MIN_DEPTH:
        raise ConfigError(f"verify-ed needs N = 2^D with D >= {const.MIN_DEPTH}, got {n}")

    net = ctx.network(depth)
    h = build_dense(n)

    def dense(flips: Tuple[BulkCoordinate, ...] = ()) -> float:
        vec = boundary_vector(net, flips)
        return float(np.vdot(vec, h @ vec).real)

    e0 = dense()
    coords = [BulkCoordinate(rho, s) for rho in net.layers for s in range(2 ** rho)]
    rows: List[Dict[str, Any]] = [{"quantity": "E_GS", "flips": "", "engine": ground_energy(net), "oracle": e0}]
    for x in coords:
        rows.append({
            "quantity": "E_1h", "flips": f"{x.rho}:{x.s}",
            "engine": excitation_energy(net, (x,)), "oracle": dense((x,)) - e0,
        })
    for i, x1 in enumerate(coords):
        for x2 in coords[i + 1:]:
            rows.append({
                "quantity": "E_2h", "flips": f"{x1.rho}:{x1.s} {x2.rho}:{x2.s}",
                "engine": excitation_energy(net, (x1, x2)), "oracle": dense((x1, x2)) - e0,
            })
    for row in rows:
        row["abs_diff"] = abs(row["engine"] - row["oracle"])
    ctx.write_csv(f"verify_ed_n{n}", rows)

    max_diff = max(row["abs_diff"] for row in rows)
    summary = {"N": n, "n_checks": len(rows), "max_abs_diff": max_diff, "tolerance": VERIFY_TOL}
    ctx.write_json(f"verify_ed_n{n}", summary)
    if max_diff > VERIFY_TOL:
        raise NumericalCheckError(f"Engine deviates from the dense oracle by {max_diff:.3e}")
    logger.info(f"verify-ed N={n}: {len(rows)} checks, max |engine - oracle| = {max_diff:.3e}")
    return summary


# -----------------------------------------------------------------------------
# REGISTRY
# -----------------------------------------------------------------------------

EXPERIMENTS: Dict[str, Runner] = {
    "gs-energy": run_gs_energy,
    "correlators": run_correlators,
    "spectrum": run_spectrum,
    "hologron-1": run_hologron_1,
    "hologron-2": run_hologron_2,
    "collapse": run_collapse,
    "fit": run_fit,
    "ads-predict": run_ads_predict,
    "noise-sweep": run_noise_sweep,
    "verify-ed": run_verify_ed,
}
