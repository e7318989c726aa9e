from __future__ import annotations

"""
Unit tests for Parameter Extraction and Collapse Quality.

Verifies:
1. Exact recovery of parameters from synthetic data for every fit model and single-particle form.
2. Domain and conditioning guards.
3. Collapse quality limits and alignment checks.
"""

import math

import numpy as np
import pytest

from holomera.core.analysis import (
    collapse_quality,
    curve_from_pairs,
    family_spread,
    fit_power_law,
    fit_single_particle,
    fit_tail,
    fit_w,
    w_design,
)
from holomera.domain.errors import AlignmentError, ConditioningError, FitDomainError

ELL = 1.0 / math.log(2.0)


def test_single_particle_fit_recovers_parameters() -> None:
    """TC-01: Verify E = 1.25 * 2^rho gives ell = 1/log 2 and mc^2 = 2.5."""
    rho = np.arange(4, 11, dtype=float)
    result = fit_single_particle(rho, 1.25 * 2.0 ** rho)

    assert result.model == "1p"
    assert result.params["ell"] == pytest.approx(ELL, rel=1e-10)
    assert result.params["mc2"] == pytest.approx(2.5, rel=1e-10)
    assert result.residual < 1e-10
    assert result.n_points == 7
    assert result.window == (4.0, 10.0)


def test_single_particle_fit_window() -> None:
    """TC-02: Verify the window restricts the data and too few points are refused."""
    rho = np.arange(2, 11, dtype=float)
    energy = 1.25 * 2.0 ** rho
    energy[0] = 100.0
    result = fit_single_particle(rho, energy, window=(3.0, 10.0))
    assert result.params["mc2"] == pytest.approx(2.5, rel=1e-10)

    with pytest.raises(FitDomainError):
        fit_single_particle(rho, energy, window=(8.0, 10.0))


def test_single_particle_fit_domain_errors() -> None:
    """TC-03: Verify non-positive energies and mismatched lengths are refused."""
    rho = [4.0, 5.0, 6.0, 7.0]
    with pytest.raises(FitDomainError):
        fit_single_particle(rho, [1.0, -2.0, 4.0, 8.0])
    with pytest.raises(FitDomainError):
        fit_single_particle(rho, [1.0, 2.0, 4.0])
    with pytest.raises(FitDomainError):
        fit_single_particle(rho, [8.0, 4.0, 2.0, 1.0])


def test_tail_fit_recovers_parameters() -> None:
    """TC-04: Verify C1 - C2 exp(-d/ell) with ell fixed."""
    d = np.arange(1, 9, dtype=float)
    y = -0.4 - 1.7 * np.exp(-d / ELL)
    result = fit_tail(d, y, ELL, min_separation=3.0)

    assert result.params["C1"] == pytest.approx(-0.4, abs=1e-10)
    assert result.params["C2"] == pytest.approx(1.7, abs=1e-9)
    assert result.n_points == 6
    assert result.fixed == {"ell": ELL}


def test_tail_fit_single_separation_is_ill_conditioned() -> None:
    """TC-05: Verify repeated identical separations raise ConditioningError."""
    with pytest.raises(ConditioningError):
        fit_tail([4.0, 4.0, 4.0], [1.0, 1.1, 0.9], ELL)
    with pytest.raises(ConditioningError):
        fit_tail([4.0], [1.0], ELL)


def test_w_fit_recovers_parameters() -> None:
    """TC-06: Verify the four-term model on an exact synthetic curve."""
    d = np.arange(0, 9, dtype=float)
    coef = np.array([-0.1, -0.3, 0.2, -0.05])
    result = fit_w(d, w_design(d, ELL) @ coef, ELL)

    for name, value in zip("ABCD", coef):
        assert result.params[name] == pytest.approx(value, abs=1e-8)
    assert w_design(np.array([0.0]), ELL).tolist() == [[1.0, 4.0, 2.0, 6.0]]


def test_power_law_fit_recovers_exponent() -> None:
    """TC-07: Verify |C(r)| = 0.7 r^-0.28 gives Delta = 0.14."""
    r = np.arange(1, 17, dtype=float)
    result = fit_power_law(r, -0.7 * r ** -0.28)

    assert result.params["exponent"] == pytest.approx(0.28, abs=1e-10)
    assert result.params["delta"] == pytest.approx(0.14, abs=1e-10)
    assert result.params["amplitude"] == pytest.approx(0.7, rel=1e-10)
    with pytest.raises(FitDomainError):
        fit_power_law([0.0, 1.0, 2.0], [1.0, 0.5, 0.3])
    with pytest.raises(FitDomainError):
        fit_power_law([1.0, 2.0, 3.0], [1.0, 0.0, 0.3])


def test_fit_result_serialization() -> None:
    """TC-08: Verify the JSON payload of a fit."""
    payload = fit_power_law([1.0, 2.0, 4.0], [1.0, 0.5, 0.25]).to_dict()
    assert set(payload) == {"model", "params", "sigmas", "window", "residual", "n_points", "fixed"}
    assert payload["window"] == [1.0, 4.0]


def test_perfect_collapse_scores_zero() -> None:
    """TC-09: Verify curves that differ only by their normalizers collapse perfectly."""
    raw = [{1.0: 1.0, 2.0: 2.0}, {1.0: 2.0, 2.0: 4.0}, {1.0: 3.0, 2.0: 6.0}]
    normalized = [{x: v / k for x, v in c.items()} for k, c in zip((1.0, 2.0, 3.0), raw)]
    assert collapse_quality(raw, normalized) == pytest.approx(0.0, abs=1e-12)


def test_no_collapse_scores_one() -> None:
    """TC-10: Verify normalization that does not reduce the spread scores one."""
    raw = [{1.0: 1.0, 2.0: 2.0}, {1.0: 2.0, 2.0: 4.0}]
    assert collapse_quality(raw, raw) == pytest.approx(1.0)
    assert collapse_quality([{1.0: 1.0}, {1.0: 1.0}], [{1.0: 1.0}, {1.0: 1.0}]) == 0.0


def test_collapse_alignment_errors() -> None:
    """TC-11: Verify mismatched families are refused."""
    a, b = {1.0: 1.0, 2.0: 2.0}, {1.0: 2.0, 2.0: 3.0}
    with pytest.raises(AlignmentError):
        collapse_quality([a, b], [a])
    with pytest.raises(AlignmentError):
        collapse_quality([a, b], [a, {1.0: 2.0}])
    with pytest.raises(AlignmentError):
        family_spread([a])
    with pytest.raises(AlignmentError):
        family_spread([{1.0: 1.0}, {2.0: 1.0}])


def test_curve_from_pairs_averages_duplicates() -> None:
    """TC-12: Verify repeated grid points are averaged."""
    assert curve_from_pairs([(1, 2.0), (1, 4.0), (2, 5.0)]) == {1.0: 3.0, 2.0: 5.0}


def _cosh_energies(rho: np.ndarray, inv_ell: float = 0.69, mc2: float = 2.5) -> np.ndarray:
    return mc2 * np.cosh(inv_ell * rho)


def test_cosh_fit_recovers_inner_layers() -> None:
    """TC-13: Verify the cosh form recovers 1/ell and mc^2 from data down to rho = 0."""
    rho = np.arange(0, 12, dtype=float)
    result = fit_single_particle(rho, _cosh_energies(rho), form="cosh")

    assert result.model == "1p-cosh"
    assert result.params["inv_ell"] == pytest.approx(0.69, abs=1e-6)
    assert result.params["mc2"] == pytest.approx(2.5, abs=1e-5)
    assert result.residual < 1e-6


def test_cosh_fit_skips_boundary_layer() -> None:
    """TC-14: Verify the default window of a D = 12 network avoids the outer-layer dip."""
    rho = np.arange(0, 12, dtype=float)
    energy = _cosh_energies(rho) * (1.0 - 0.3 * np.exp(-(11.0 - rho)))

    windowed = fit_single_particle(rho, energy, window=(2.0, 7.0), form="cosh")
    full = fit_single_particle(rho, energy)

    assert windowed.params["inv_ell"] == pytest.approx(0.69, abs=0.01)
    assert windowed.params["mc2"] == pytest.approx(2.5, abs=0.1)
    assert abs(full.params["inv_ell"] - 0.69) > 0.03


def test_unknown_single_particle_form_is_refused() -> None:
    """TC-15: Verify only the exp and cosh forms are accepted."""
    rho = np.arange(4, 9, dtype=float)
    with pytest.raises(FitDomainError):
        fit_single_particle(rho, 1.25 * 2.0 ** rho, form="sinh")


def test_tail_fit_default_separation() -> None:
    """TC-16: Verify the tail fit keeps only separations of at least seven layers by default."""
    d = np.arange(1, 12, dtype=float)
    result = fit_tail(d, 0.08 - 13.6 * np.exp(-d / ELL), ELL)

    assert result.window == (7.0, 11.0)
    assert result.n_points == 5
    assert result.params["C1"] == pytest.approx(0.08, abs=1e-9)
    assert result.params["C2"] == pytest.approx(13.6, rel=1e-8)
