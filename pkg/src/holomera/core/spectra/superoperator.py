from __future__ import annotations

"""
Ascending Superoperators.

A k-site block of coarse sites is mapped to the 2k fine sites below it by k
isometries followed by the k-1 disentanglers internal to the block. The
superoperator ``A^[k,j]`` pulls an operator on the fine window starting at
position ``j+1`` back to the k coarse sites:
``A(O) = Y^dagger (O (x) I) Y``. Matrices act on C-order vectorized
operators, ``vec(O)[w * 2**k + x] = O[w, x]``.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import numpy.typing as npt

from holomera.core.network.gates import GateSet, analytic_gates
from holomera.core.tensor import apply_operator, operator_matrix
from holomera.domain import constants as const
from holomera.domain.errors import CapacityError, ConfigError

logger = logging.getLogger(__name__)

VARIANTS = ("single", "average", "even", "odd")


@dataclass(frozen=True, eq=False)
class Superoperator:
    """
    Linear map on k-site operators.

    Attributes:
        k: Support size.
        variant: ``single``, ``average``, ``even`` or ``odd``.
        offsets: Window indices ``j`` averaged over.
        matrix: ``(4**k, 4**k)`` complex matrix.
    """
    k: int
    variant: str
    offsets: Tuple[int, ...]
    matrix: npt.NDArray[np.complex128]

    @property
    def dim(self) -> int:
        return 2 ** self.k

    @property
    def label(self) -> str:
        if self.variant == "single":
            return f"A[{self.k},{self.offsets[0]}]"
        return f"A[{self.k}]-{self.variant}"

    def apply(self, op: npt.ArrayLike) -> npt.NDArray[np.complex128]:
        """Apply to an operator given as matrix or tensor; returns a matrix."""
        mat = np.asarray(op)
        if mat.ndim != 2:
            mat = operator_matrix(mat)
        if mat.shape != (self.dim, self.dim):
            raise ConfigError(f"{self.label} acts on {self.dim}x{self.dim} operators, got {mat.shape}")
        return (self.matrix @ mat.reshape(-1)).reshape(self.dim, self.dim)

    def unitality_residual(self) -> float:
        eye = np.eye(self.dim)
        return float(np.linalg.norm(self.apply(eye) - eye))


def variant_offsets(k: int, variant: str, j: Optional[int] = None) -> Tuple[int, ...]:
    """
    Window indices combined by a variant.

    Raises:
        ConfigError: Unknown variant or window index out of range.
    """
    if variant == "single":
        if j is None or not (0 <= j <= k - 2):
            raise ConfigError(f"Single superoperator needs 0 <= j <= {k - 2}, got {j}")
        return (j,)
    if variant == "average":
        return tuple(range(k - 1))
    if variant == "even":
        return tuple(range(0, k - 1, 2))
    if variant == "odd":
        offsets = tuple(range(1, k - 1, 2))
        if offsets:
            return offsets
    raise ConfigError(f"Unknown or empty superoperator variant '{variant}' for k={k}")


def block_isometry(gates: GateSet, k: int) -> npt.NDArray[np.complex128]:
    """
    Map from k coarse sites to 2k fine sites, legs ``(f_0..f_{2k-1}, c_0..c_{k-1})``.
    """
    operands: list = []
    for i in range(k):
        operands += [gates.v, [2 * i, 2 * i + 1, 2 * k + i]]
    y = np.einsum(*operands, list(range(3 * k)), optimize=True)
    for i in range(k - 1):
        y = apply_operator(y, gates.u, [2 * i + 1, 2 * i + 2])
    return y


def single_matrix(y: npt.NDArray[np.complex128], k: int, j: int) -> npt.NDArray[np.complex128]:
    """Matrix of ``A^[k,j]`` from the block isometry."""
    t = j + 1
    window = list(range(t, t + k))
    rest = [q for q in range(2 * k) if q not in window]
    coarse = list(range(2 * k, 3 * k))
    d = 2 ** k
    yp = y.transpose(window + rest + coarse).reshape(d, d, d)
    s = np.tensordot(yp.conj(), yp, axes=([1], [1]))
    return s.transpose(1, 3, 0, 2).reshape(d * d, d * d)


def build_superoperator(
        k: int,
        variant: str = "average",
        gates: Optional[GateSet] = None,
        j: Optional[int] = None,
) -> Superoperator:
    """
    Build a k-site ascending superoperator.

    Args:
        k: Support size, ``3 <= k <= 6``.
        variant: ``single`` (needs ``j``), ``average`` over all windows, or the
            ``even`` / ``odd`` selective averages.
        gates: Gates (analytic by default).
        j: Window index for the single variant.

    Raises:
        CapacityError: Unsupported ``k``.
        ConfigError: Invalid variant or window.
    """
    if not (const.MIN_SUPEROPERATOR_K <= k <= const.MAX_SUPEROPERATOR_K):
        raise CapacityError(
            f"Superoperator support must lie in [{const.MIN_SUPEROPERATOR_K}, "
            f"{const.MAX_SUPEROPERATOR_K}], got k={k}"
        )
    gates = gates if gates is not None else analytic_gates()
    offsets = variant_offsets(k, variant, j)

    y = block_isometry(gates, k)
    matrix = single_matrix(y, k, offsets[0])
    for off in offsets[1:]:
        matrix += single_matrix(y, k, off)
    if len(offsets) > 1:
        matrix /= len(offsets)

    logger.debug(f"Built superoperator k={k} variant={variant} offsets={offsets}")
    return Superoperator(k=k, variant=variant, offsets=offsets, matrix=matrix)

