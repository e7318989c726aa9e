from __future__ import annotations

"""
Recursive Ascension.

Repeated application of an ascending superoperator drives any operator to
its identity component ``tr(phi_1^L O) I``; the approach is governed by the
next scaling dimension in the operator's support (``Delta_T = 2`` for the
energy density, a residual decaying as ``2^{-2n}``).
"""

import logging
from typing import List, Optional

import numpy as np
import numpy.typing as npt

from holomera.core.lattice.hamiltonian import energy_density_tensor
from holomera.core.network.gates import GateSet
from holomera.core.spectra.decomposition import eigendecompose
from holomera.core.spectra.superoperator import Superoperator, build_superoperator
from holomera.core.tensor import operator_matrix
from holomera.domain.errors import ConfigError

logger = logging.getLogger(__name__)


def ascend_iterated(
        op: npt.ArrayLike,
        steps: int,
        superop: Optional[Superoperator] = None,
        *,
        variant: str = "average",
        gates: Optional[GateSet] = None,
) -> npt.NDArray[np.complex128]:
    """
    Apply ``A^n`` to a k-site operator.

    Args:
        op: Operator as matrix or tensor.
        steps: Number of ascension steps ``n >= 0``; ``n = 0`` returns ``op``.
        superop: Prebuilt superoperator; built from ``variant`` and ``gates``
            with the support of ``op`` otherwise.
        variant: Variant used when ``superop`` is not given.
        gates: Gates used when ``superop`` is not given.

    Returns:
        npt.NDArray[np.complex128]: ``A^n[op]`` as a matrix.
    """
    if steps < 0:
        raise ConfigError(f"Invalid step count {steps}: must be >= 0.")
    mat = _as_matrix(op)
    if superop is None:
        superop = build_superoperator(int(np.log2(mat.shape[0])), variant, gates)
    for _ in range(steps):
        mat = superop.apply(mat)
    return mat


def identity_residual_curve(
        op: npt.ArrayLike,
        steps: int,
        superop: Optional[Superoperator] = None,
        *,
        variant: str = "average",
        gates: Optional[GateSet] = None,
) -> List[float]:
    """
    Frobenius distance ``||A^n[op] - e I||`` for ``n = 0..steps``.

    ``e = tr(phi_1^L op)`` is the identity component of ``op`` under the
    same superoperator.
    """
    mat = _as_matrix(op)
    if superop is None:
        superop = build_superoperator(int(np.log2(mat.shape[0])), variant, gates)
    spectrum = eigendecompose(superop)
    e = complex(np.trace(spectrum.left[spectrum.identity_index()] @ mat))
    eye = np.eye(mat.shape[0])

    out: List[float] = []
    for _ in range(steps + 1):
        out.append(float(np.linalg.norm(mat - e * eye)))
        mat = superop.apply(mat)
    logger.debug(f"Identity residuals over {steps} steps: first={out[0]:.3e} last={out[-1]:.3e}")
    return out


def thermodynamic_energy_density(gates: Optional[GateSet] = None) -> float:
    """Scale-invariant energy density ``tr(phi_1^L h)`` from the averaged 3-site fixed point."""
    spectrum = eigendecompose(build_superoperator(3, "average", gates))
    h = operator_matrix(energy_density_tensor())
    value = complex(np.trace(spectrum.left[spectrum.identity_index()] @ h))
    logger.info(f"Thermodynamic energy density: {value.real:.10f}")
    return float(value.real)


def _as_matrix(op: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    mat = np.asarray(op, dtype=np.complex128)
    if mat.ndim != 2:
        mat = operator_matrix(mat)
    return mat
