from __future__ import annotations

"""
Hologron Gauge Freedom.

The flipped isometry is only fixed up to a unitary on its two-dimensional
output space: ``v_flip -> e^{i phi} v_flip e^{i theta . sigma}`` leaves the
ground-state network untouched. The transform is realized as a unitary
``G = v v^dagger + e^{i phi} v_flip e^{i theta.sigma} v_flip^dagger``
applied on the isometry outputs.
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.linalg as la

from holomera.core.lattice.hamiltonian import PAULI
from holomera.core.network.gates import GateSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HologronGauge:
    """
    Gauge parameters of the flipped isometry.

    Attributes:
        theta: Rotation vector multiplying (sigma_x, sigma_y, sigma_z).
        phi: Global phase of the flipped branch.
    """
    theta: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    phi: float = 0.0

    @property
    def is_canonical(self) -> bool:
        return self.phi == 0.0 and all(t == 0.0 for t in self.theta)

    def rotation(self) -> np.ndarray:
        """The 2x2 unitary ``e^{i phi} e^{i theta . sigma}``."""
        generator = sum(t * PAULI[a] for t, a in zip(self.theta, "XYZ"))
        return np.exp(1j * self.phi) * la.expm(1j * generator)


CANONICAL_GAUGE = HologronGauge()


def random_gauge(rng: np.random.Generator) -> HologronGauge:
    """Draw theta components uniformly from ``[0, 2 pi)``; the sweep keeps ``phi = 0``."""
    theta = rng.uniform(0.0, 2.0 * math.pi, size=3)
    return HologronGauge(theta=(float(theta[0]), float(theta[1]), float(theta[2])))


def gauge_matrix(gates: GateSet, gauge: HologronGauge) -> np.ndarray:
    v = gates.isometry_matrix()
    vt = gates.isometry_matrix(flipped=True)
    return v @ v.conj().T + vt @ gauge.rotation() @ vt.conj().T


def gauge_transform(gates: GateSet, gauge: HologronGauge) -> GateSet:
    """
    Apply a hologron gauge to the isometry.

    Args:
        gates: Source gates.
        gauge: Gauge parameters.

    Returns:
        GateSet: Gates with ``v`` unchanged and the flipped isometry rotated.
    """
    if gauge.is_canonical:
        return gates
    g = gauge_matrix(gates, gauge)
    w_new = (g @ gates.w.reshape(4, 4)).reshape(2, 2, 2, 2)
    logger.debug(f"Applied hologron gauge theta={gauge.theta} phi={gauge.phi:.4f}")
    return GateSet(w=w_new, u=gates.u)
