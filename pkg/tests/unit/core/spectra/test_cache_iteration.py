from __future__ import annotations

"""
Unit tests for the Superoperator Cache, Iterated Ascension and Coefficients.

Verifies:
1. SQLite index creation, write-through, hits and purging.
2. Deterministic composite hashing.
3. Convergence of iterated ascension towards the identity component.
4. Guards of the stress-tensor and coefficient protocols.
5. Unit-norm stress operators and the fixed conjugator placement (k = 5, slow).
"""

import math
from pathlib import Path

import numpy as np
import pytest

from holomera.core.lattice import energy_density_tensor
from holomera.core.spectra import (
    SpectrumCache,
    ascend_iterated,
    build_superoperator,
    coefficient_table,
    conformal_project,
    conjugator_placements,
    eigendecompose,
    extract_stress_and_descendants,
    hologron_conjugator,
    identity_residual_curve,
    place_conjugator,
    variant_offsets,
)
from holomera.core.tensor import embed_operator
from holomera.domain.errors import ConfigError, LabelingRequiredError


@pytest.fixture
def cache(tmp_path: Path) -> SpectrumCache:
    """Cache in a temp dir that stores every support size."""
    return SpectrumCache(str(tmp_path / "cache"), min_k=3)


def test_cache_initialization_creates_index(cache: SpectrumCache, tmp_path: Path) -> None:
    """TC-01: Verify the SQLite index exists after construction."""
    assert (tmp_path / "cache" / SpectrumCache.DB_FILENAME).exists()
    assert cache.enabled is True


def test_cache_write_through_and_hit(cache: SpectrumCache, gates) -> None:
    """TC-02: Verify a built superoperator is stored and served back unchanged."""
    first = cache.superoperator(3, "average")
    key = SpectrumCache.compute_composite_hash(3, "average", variant_offsets(3, "average"), gates)

    stored = cache.get_entry(key)
    assert stored is not None
    np.testing.assert_array_equal(stored, first.matrix)

    second = cache.superoperator(3, "average")
    np.testing.assert_array_equal(second.matrix, first.matrix)
    assert second.label == first.label


def test_cache_purge(cache: SpectrumCache, gates) -> None:
    """TC-03: Verify purging removes index rows and matrix files."""
    cache.superoperator(3, "even")
    key = SpectrumCache.compute_composite_hash(3, "even", variant_offsets(3, "even"), gates)
    assert cache.get_entry(key) is not None

    cache.purge_all()
    assert cache.get_entry(key) is None


def test_composite_hash_is_deterministic(gates) -> None:
    """TC-04: Verify the hash is stable and separates variants."""
    h1 = SpectrumCache.compute_composite_hash(5, "average", (0, 1, 2, 3), gates)
    h2 = SpectrumCache.compute_composite_hash(5, "average", (0, 1, 2, 3), gates)
    h3 = SpectrumCache.compute_composite_hash(5, "even", (0, 2), gates)

    assert h1 == h2
    assert h1 != h3
    assert len(h1) == 64


def test_small_supports_bypass_cache(tmp_path: Path, gates) -> None:
    """TC-05: Verify supports below min_k are never written."""
    cache = SpectrumCache(str(tmp_path), min_k=5)
    cache.superoperator(3, "average")
    key = SpectrumCache.compute_composite_hash(3, "average", variant_offsets(3, "average"), gates)
    assert cache.get_entry(key) is None


def test_iterated_ascension_converges_to_identity() -> None:
    """TC-06: Verify ||A^n[h] - e I|| decreases with n."""
    residuals = identity_residual_curve(energy_density_tensor(), 10)

    assert len(residuals) == 11
    assert residuals[-1] < residuals[0]
    assert residuals[-1] < 0.5 * residuals[0]


def test_ascend_iterated_zero_steps_is_identity_map() -> None:
    """TC-07: Verify n=0 returns the operator and negative steps are refused."""
    h = energy_density_tensor().reshape(8, 8)
    np.testing.assert_array_equal(ascend_iterated(h, 0), h)
    with pytest.raises(ConfigError):
        ascend_iterated(h, -1)


def test_hologron_conjugator_is_hermitian_unitary() -> None:
    """TC-08: Verify the conjugator squares to one."""
    xt = hologron_conjugator()
    np.testing.assert_allclose(xt @ xt, np.eye(16), atol=1e-12)
    np.testing.assert_allclose(xt, xt.conj().T, atol=1e-12)


def test_stress_protocol_needs_five_sites() -> None:
    """TC-09: Verify the stress-tensor protocol refuses k < 5."""
    spectrum = eigendecompose(build_superoperator(4, "average"))
    with pytest.raises(ConfigError):
        extract_stress_and_descendants(spectrum)


def test_coefficients_need_labeled_stress_tensor() -> None:
    """TC-10: Verify C_alpha cannot be computed without labeled stress operators."""
    spectrum = eigendecompose(build_superoperator(3, "average"))
    with pytest.raises(LabelingRequiredError):
        coefficient_table(spectrum, None)


def test_place_conjugator_bounds() -> None:
    """TC-11: Verify a fixed placement matches the averaged set and must fit the window."""
    np.testing.assert_allclose(place_conjugator(5, 1), conjugator_placements(5)[1], atol=1e-14)
    with pytest.raises(ConfigError):
        place_conjugator(5, 2)
    with pytest.raises(ConfigError):
        place_conjugator(5, -1)


@pytest.fixture(scope="module")
def spectrum5():
    return eigendecompose(build_superoperator(5, "average"))


@pytest.mark.slow
def test_stress_operators_are_unit_norm(spectrum5) -> None:
    """TC-12: Verify unit-norm right operators, dual pairing and the weight of h on them."""
    stress = extract_stress_and_descendants(spectrum5)
    h = embed_operator(energy_density_tensor().reshape(8, 8), 5, stress.center - 1)

    for lab, right in stress.right.items():
        assert np.linalg.norm(right) == pytest.approx(1.0, abs=1e-12)
        for other, left in stress.left.items():
            expected = 1.0 if other == lab else 0.0
            assert abs(np.trace(left @ right) - expected) < 1e-7

    assert stress.c_T == pytest.approx(float(np.trace(stress.left["T"] @ h).real), abs=1e-12)
    assert abs(stress.c_T - 1.0) > 1e-3
    rebuilt = sum(np.trace(stress.left[lab] @ h) * stress.right[lab] for lab in stress.right)
    np.testing.assert_allclose(rebuilt, conformal_project(h, 2.0, spectrum5), atol=1e-8)


@pytest.mark.slow
def test_coefficients_use_fixed_conjugator(spectrum5) -> None:
    """TC-13: Verify mc^2/2 at the default placement and the offset guard."""
    stress = extract_stress_and_descendants(spectrum5)
    table = coefficient_table(spectrum5, stress)

    x0 = place_conjugator(5, 0)
    phi_tt = stress.right["T"] + stress.right["Tbar"]
    left_id = spectrum5.left[spectrum5.identity_index()]
    expected = (stress.c / math.pi * np.trace(left_id @ x0 @ phi_tt @ x0)).real

    assert table.conjugator_offset == 0
    assert table.mass_energy_half == pytest.approx(expected, abs=1e-10)
    assert coefficient_table(spectrum5, stress, conjugator_offset=None).conjugator_offset is None
    with pytest.raises(ConfigError):
        coefficient_table(spectrum5, stress, conjugator_offset=2)
