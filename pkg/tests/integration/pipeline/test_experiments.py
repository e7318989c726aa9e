from __future__ import annotations

"""
Integration tests for the Experiment Orchestrator.

Runs each subcommand end to end on small networks inside a temp output
directory and checks artifacts, summaries and the mapping of library
errors onto failed results.
"""

import json
import os
from pathlib import Path
from typing import Any, Dict

import pytest

from holomera.core.pipeline import run_experiment
from holomera.infra.writers import read_csv


def _run(command: str, default_config: Dict[str, Any], **overrides: Any):
    return run_experiment(command, {**default_config, **overrides})


def test_unknown_command_fails_with_config_code(default_config) -> None:
    """TC-01: Verify unregistered subcommands map onto exit code 2."""
    result = _run("teleport", default_config)
    assert result.ok is False
    assert result.exit_code == 2
    assert result.error["error"] == "ConfigError"


def test_invalid_config_fails_before_running(default_config, tmp_path: Path) -> None:
    """TC-02: Verify range violations produce failed results and no artifacts."""
    result = _run("hologron-1", default_config, depth=2)
    assert result.exit_code == 2
    assert result.artifacts == []

    result = _run("hologron-1", default_config, depth=13)
    assert result.exit_code == 3


def test_gs_energy(default_config, tmp_path: Path) -> None:
    """TC-03: Verify ground energy artifacts, route agreement and the ED overlap."""
    result = _run("gs-energy", default_config, depth=3)

    assert result.ok, result.error
    assert [os.path.basename(p) for p in result.artifacts] == ["test_network.json", "test_gs_energy.json"]
    summary = result.summary
    assert summary["N"] == 8
    assert summary["energy"] == pytest.approx(summary["energy_ascending"], abs=1e-9)
    assert 0.0 < summary["overlap"] <= 1.0 + 1e-12
    assert summary["overlap_density"] >= summary["overlap"]
    assert summary["overlap_reference"] == pytest.approx(0.998)
    assert isinstance(summary["overlap_matches_reference"], bool)
    with open(tmp_path / "test_network.json", encoding="utf-8") as f:
        assert json.load(f)["depth"] == 3


def test_hologron_1_then_single_particle_fit(default_config, tmp_path: Path) -> None:
    """TC-04: Verify the profile CSV feeds the single-particle fit."""
    profile = _run("hologron-1", default_config, depth=7)
    assert profile.ok, profile.error
    rows = read_csv(str(tmp_path / "test_hologron1.csv"))
    assert [r["rho"] for r in rows] == [2.0, 3.0, 4.0, 5.0, 6.0]

    fit = _run("fit", default_config, depth=7, fit_model="1p", fit_rho_min=2)
    assert fit.ok, fit.error
    assert fit.summary["window"] == [2.0, 5.0]
    assert fit.summary["n_points"] == 4
    assert fit.summary["model"] == "1p-cosh"
    assert fit.summary["params"]["ell"] > 0.0
    assert os.path.isfile(tmp_path / "test_fit_1p.json")


def test_fit_without_input_fails(default_config) -> None:
    """TC-05: Verify a missing fit input is a configuration error."""
    result = _run("fit", default_config, fit_model="tail")
    assert result.ok is False
    assert result.exit_code == 2


def test_hologron_2_radial_then_tail_fit(default_config, tmp_path: Path) -> None:
    """TC-06: Verify the radial potential CSV and a tail fit with the configured ell."""
    pot = _run("hologron-2", default_config, depth=6)
    assert pot.ok, pot.error
    assert pot.summary["n_pairs"] == 2 * 6
    assert pot.summary["collapse_quality"] is not None

    fit = _run("fit", default_config, depth=6, fit_model="tail", tail_min_separation=1)
    assert fit.ok, fit.error
    assert fit.summary["fixed"]["ell"] == pytest.approx(1.0 / 0.6931471805599453)


def test_hologron_2_angular_disjoint(default_config) -> None:
    """TC-07: Verify pairs three isometries apart do not interact."""
    result = _run("hologron-2", default_config, depth=6, hologron_mode="angular", delta_s=3, rho_min=4, rho_max=5)
    assert result.ok, result.error
    assert result.summary["all_zero"] is True


def test_collapse_with_gauges(default_config, tmp_path: Path) -> None:
    """TC-08: Verify the canonical curve plus a seeded gauge ensemble."""
    result = _run("collapse", default_config, depth=5, n_gauges=2, gauge_seed=1)
    assert result.ok, result.error
    assert result.summary["n_gauges"] == 2

    rows = read_csv(str(tmp_path / "test_collapse.csv"))
    assert {r["gauge_id"] for r in rows} == {0.0, 1.0, 2.0}
    assert os.path.isfile(tmp_path / "test_collapse_gauge_mean.csv")


def test_ads_predict(default_config) -> None:
    """TC-09: Verify the three prediction tables and the summary."""
    result = _run("ads-predict", default_config, depth=6, ads_newton=0.01)
    assert result.ok, result.error
    assert len(result.artifacts) == 4
    assert result.summary["c"] == pytest.approx(result.summary["ell"])
    assert 0.0 < result.summary["angular_bracket_root"] < 2.0


def test_noise_sweep(default_config, tmp_path: Path) -> None:
    """TC-10: Verify one row per (strength, pair) and per-strength fidelities."""
    result = _run("noise-sweep", default_config, noise_kind="dephasing", noise_eps=[0.0, 0.05], n_samples=3)
    assert result.ok, result.error

    sweep = result.summary["sweep"]
    assert [s["eps"] for s in sweep] == [0.0, 0.05]
    assert sweep[0]["fidelity"] == 1.0
    assert sweep[1]["fidelity"] == pytest.approx((4 * 0.95 ** 2 + 1) / 5)
    rows = read_csv(str(tmp_path / "test_noise_dephasing.csv"))
    assert len(rows) == 2


def test_spectrum_k3(default_config, tmp_path: Path) -> None:
    """TC-11: Verify the spectrum CSV, residuals and identity convergence."""
    result = _run("spectrum", default_config, k=3)
    assert result.ok, result.error

    summary = result.summary
    assert summary["unitality_residual"] < 1e-10
    assert summary["groups"][0]["delta"] == pytest.approx(0.0, abs=0.05)
    assert summary["identity_residuals"][-1] < summary["identity_residuals"][0]
    rows = read_csv(str(tmp_path / "test_spectrum_k3_average.csv"))
    assert len(rows) == 64


def test_correlators(default_config) -> None:
    """TC-12: Verify dyadic separations up to N/2."""
    result = _run("correlators", default_config, depth=5, corr_r_min=1)
    assert result.ok, result.error
    assert result.summary["separations"] == [1, 2, 4, 8, 16]


def test_verify_ed_small(default_config, tmp_path: Path) -> None:
    """TC-13: Verify the engine agrees with the dense oracle at N=8."""
    result = _run("verify-ed", default_config, n_sites=8)
    assert result.ok, result.error
    assert result.summary["n_checks"] == 1 + 4 + 6
    assert result.summary["max_abs_diff"] < 1e-9


def test_verify_ed_capacity(default_config) -> None:
    """TC-14: Verify N above the dense limit maps onto exit code 3."""
    result = _run("verify-ed", default_config, n_sites=18)
    assert result.exit_code == 3
