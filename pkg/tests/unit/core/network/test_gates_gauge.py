from __future__ import annotations

"""
Unit tests for the Analytic Gates and the Hologron Gauge.

Verifies:
1. Unitarity and the (Y x X) v Y = v_flip relation of the closed-form gates.
2. Gauge transforms leave the ground isometry untouched.
"""

import numpy as np
import pytest

from holomera.core.network import (
    CANONICAL_GAUGE,
    GateSet,
    HologronGauge,
    check_flip_relation,
    gauge_transform,
    random_gauge,
)
from holomera.domain.errors import NumericalCheckError


def test_analytic_gates_are_unitary(gates) -> None:
    """TC-01: Verify w and u are 4x4 unitaries and v is an isometry."""
    for gate in (gates.w, gates.u):
        mat = gate.reshape(4, 4)
        np.testing.assert_allclose(mat.conj().T @ mat, np.eye(4), atol=1e-12)

    v = gates.isometry_matrix()
    vt = gates.isometry_matrix(flipped=True)
    np.testing.assert_allclose(v.conj().T @ v, np.eye(2), atol=1e-12)
    np.testing.assert_allclose(v.conj().T @ vt, np.zeros((2, 2)), atol=1e-12)


def test_flip_relation_holds_for_analytic_gates(gates) -> None:
    """TC-02: Verify the flipped isometry is (Y x X) v Y."""
    assert check_flip_relation(gates) < 1e-12


def test_gate_set_rejects_non_unitary() -> None:
    """TC-03: Verify a non-unitary gate is refused at construction."""
    bad = np.zeros((2, 2, 2, 2), dtype=np.complex128)
    with pytest.raises(NumericalCheckError):
        GateSet(w=bad, u=bad)


def test_gauge_transform_keeps_ground_isometry(gates) -> None:
    """TC-04: Verify v is unchanged and v_flip picks up the gauge rotation."""
    gauge = HologronGauge(theta=(0.3, -1.1, 0.7), phi=0.4)
    gauged = gauge_transform(gates, gauge)

    np.testing.assert_allclose(gauged.isometry_matrix(), gates.isometry_matrix(), atol=1e-12)
    np.testing.assert_allclose(
        gauged.isometry_matrix(flipped=True),
        gates.isometry_matrix(flipped=True) @ gauge.rotation(),
        atol=1e-12,
    )
    np.testing.assert_array_equal(gauged.u, gates.u)


def test_canonical_gauge_is_identity(gates) -> None:
    """TC-05: Verify the canonical gauge returns the gates unchanged."""
    assert CANONICAL_GAUGE.is_canonical
    assert gauge_transform(gates, CANONICAL_GAUGE) is gates
    np.testing.assert_allclose(CANONICAL_GAUGE.rotation(), np.eye(2), atol=1e-12)


def test_random_gauge_is_seeded() -> None:
    """TC-06: Verify random gauges are reproducible and unitary."""
    g1 = random_gauge(np.random.default_rng(7))
    g2 = random_gauge(np.random.default_rng(7))

    assert g1 == g2
    assert not g1.is_canonical
    r = g1.rotation()
    np.testing.assert_allclose(r.conj().T @ r, np.eye(2), atol=1e-12)


def test_random_gauge_keeps_zero_phase() -> None:
    """TC-07: Verify sweep gauges rotate v_flip by theta only, with phi = 0."""
    for seed in range(5):
        g = random_gauge(np.random.default_rng(seed))
        assert g.phi == 0.0
        assert any(t != 0.0 for t in g.theta)
