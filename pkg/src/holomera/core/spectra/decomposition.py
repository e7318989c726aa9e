from __future__ import annotations

"""
Scaling Spectrum Decomposition.

Full non-Hermitian eigendecomposition of an ascending superoperator,
resolved by Z2 charge (conjugation by ``Z^{(x)k}`` multiplies a basis
operator ``|w><x|`` by ``(-1)^{|w|+|x|}``, so each charge sector is an exact
block). Left eigenoperators are fixed by inverting the overlap with the
right eigenoperators, giving ``tr(phi^L_a phi^R_b) = delta_ab``.
"""

import logging
import warnings
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
import numpy.typing as npt
import scipy.linalg as la

from holomera.core.spectra.superoperator import Superoperator
from holomera.core.tensor import popcount
from holomera.domain import constants as const
from holomera.domain.errors import NumericalCheckError, SpectrumDegeneracyWarning

logger = logging.getLogger(__name__)

_ILL_CONDITIONED = 1e8


@dataclass(frozen=True)
class DimensionGroup:
    """Eigenvalues sharing a scaling dimension within the grouping tolerance."""
    delta: float
    indices: tuple

    @property
    def multiplicity(self) -> int:
        return len(self.indices)


@dataclass(frozen=True, eq=False)
class ScalingSpectrum:
    """
    Eigen-data of a superoperator, sorted by decreasing ``|lambda|``.

    Attributes:
        k: Support size.
        variant: Variant label of the source superoperator.
        eigenvalues: Complex eigenvalues ``(m,)``.
        charges: Z2 charge (+1 / -1) per eigenvalue.
        right: Right eigenoperators ``(m, 2**k, 2**k)``; unit Frobenius norm
            except the identity, which is exactly ``I``.
        left: Dual operators with ``tr(left[a] @ right[b]) = delta_ab``.
    """
    k: int
    variant: str
    eigenvalues: npt.NDArray[np.complex128]
    charges: npt.NDArray[np.int64]
    right: npt.NDArray[np.complex128]
    left: npt.NDArray[np.complex128]

    @property
    def deltas(self) -> npt.NDArray[np.float64]:
        return -np.log2(np.abs(self.eigenvalues))

    @property
    def size(self) -> int:
        return int(self.eigenvalues.size)

    def identity_index(self) -> int:
        idx = int(np.argmin(np.abs(self.eigenvalues - 1.0)))
        if abs(self.eigenvalues[idx] - 1.0) > 1e-8:
            raise NumericalCheckError("Spectrum has no unit eigenvalue (superoperator not unital)")
        return idx

    def group_indices(self, delta: float, tol: float = const.DELTA_GROUP_TOL) -> List[int]:
        return [int(i) for i in np.flatnonzero(np.abs(self.deltas - delta) < tol)]

    def closest(self, delta: float, charge: Optional[int] = None) -> int:
        """Index of the eigenvalue whose dimension is closest to ``delta``."""
        candidates = np.arange(self.size)
        if charge is not None:
            candidates = candidates[self.charges == charge]
        return int(candidates[np.argmin(np.abs(self.deltas[candidates] - delta))])

    def groups(self, tol: float = const.DELTA_GROUP_TOL) -> List[DimensionGroup]:
        """Partition the spectrum into dimension groups (single-linkage within ``tol``)."""
        order = np.argsort(self.deltas, kind="stable")
        out: List[DimensionGroup] = []
        current: List[int] = []
        for idx in order:
            if current and self.deltas[idx] - self.deltas[current[-1]] >= tol:
                out.append(_make_group(self.deltas, current))
                current = []
            current.append(int(idx))
        if current:
            out.append(_make_group(self.deltas, current))
        return out

    def biorthonormality_residual(self) -> float:
        overlap = np.einsum("axw,bwx->ab", self.left, self.right)
        return float(np.max(np.abs(overlap - np.eye(self.size))))


def _make_group(deltas: npt.NDArray[np.float64], members: List[int]) -> DimensionGroup:
    return DimensionGroup(delta=float(np.mean(deltas[members])), indices=tuple(members))


def charge_sectors(k: int) -> dict:
    """Vectorized-operator indices of the even (+1) and odd (-1) charge sectors."""
    d = 2 ** k
    idx = np.arange(d * d, dtype=np.int64)
    parity = (popcount(idx // d, k) + popcount(idx % d, k)) % 2
    return {+1: np.flatnonzero(parity == 0), -1: np.flatnonzero(parity == 1)}


def charge_block_residual(op: Superoperator) -> float:
    """Norm of the matrix elements coupling different charge sectors."""
    sec = charge_sectors(op.k)
    m = op.matrix
    return float(
        np.linalg.norm(m[np.ix_(sec[+1], sec[-1])]) + np.linalg.norm(m[np.ix_(sec[-1], sec[+1])])
    )


def eigendecompose(
        op: Superoperator,
        *,
        cutoff: float = const.NULL_EIGENVALUE_CUTOFF,
        cluster_tol: float = const.EIGEN_CLUSTER_TOL,
) -> ScalingSpectrum:
    """
    Eigendecompose a superoperator sector by sector.

    Eigenvalues with ``|lambda| <= cutoff`` (infinite dimension) are dropped.

    Args:
        op: Superoperator.
        cutoff: Magnitude below which eigenvalues are discarded.
        cluster_tol: Distance under which eigenvalues count as degenerate.

    Returns:
        ScalingSpectrum: Sorted eigen-data.

    Warns:
        SpectrumDegeneracyWarning: A degenerate cluster is close to defective.
    """
    d = op.dim
    sectors = charge_sectors(op.k)
    leak = charge_block_residual(op)
    if leak > 1e-10 * max(1.0, float(np.linalg.norm(op.matrix))):
        logger.warning(f"{op.label} couples charge sectors (residual {leak:.2e})")

    values: List[np.ndarray] = []
    charges: List[np.ndarray] = []
    rights: List[np.ndarray] = []
    lefts: List[np.ndarray] = []
    identity_vec = np.eye(d, dtype=np.complex128).reshape(-1)

    for charge, idx in sectors.items():
        block = op.matrix[np.ix_(idx, idx)]
        lam, vl, vr = la.eig(block, left=True, right=True)
        vl = vl / np.linalg.norm(vl, axis=0, keepdims=True)
        vr = vr / np.linalg.norm(vr, axis=0, keepdims=True)
        keep = (np.abs(lam) > cutoff) & ~_split_null(lam, vl, vr)
        if np.count_nonzero(~keep):
            logger.debug(f"{op.label}: dropped {np.count_nonzero(~keep)} null eigenvalues in sector {charge:+d}")
        lam, vl, vr = lam[keep], vl[:, keep], vr[:, keep]

        if charge == +1:
            vr = _pin_identity(lam, vr, identity_vec[idx])

        rows = vl.conj().T
        _warn_defective_clusters(lam, rows, vr, cluster_tol, op.label)
        rows = _dual_rows(rows, vr, op.label, charge)

        full_r = np.zeros((lam.size, d * d), dtype=np.complex128)
        full_l = np.zeros((lam.size, d * d), dtype=np.complex128)
        full_r[:, idx] = vr.T
        full_l[:, idx] = rows
        values.append(lam)
        charges.append(np.full(lam.size, charge, dtype=np.int64))
        rights.append(full_r)
        lefts.append(full_l)

    lam_all = np.concatenate(values)
    order = np.lexsort((-np.concatenate(charges), -np.abs(lam_all)))
    right = np.concatenate(rights)[order].reshape(-1, d, d)
    left = np.concatenate(lefts)[order].reshape(-1, d, d).transpose(0, 2, 1)

    spectrum = ScalingSpectrum(
        k=op.k,
        variant=op.variant,
        eigenvalues=lam_all[order],
        charges=np.concatenate(charges)[order],
        right=right,
        left=left,
    )
    residual = spectrum.biorthonormality_residual()
    if residual > const.BIORTHONORMAL_TOL:
        warnings.warn(
            SpectrumDegeneracyWarning(
                f"{op.label}: biorthonormality residual {residual:.2e}", spectrum.eigenvalues.tolist()
            ),
            stacklevel=2,
        )
    logger.info(
        f"{op.label}: {spectrum.size} eigenvalues kept, leading dimensions "
        f"{np.round(spectrum.deltas[:6], 4).tolist()}"
    )
    return spectrum


def _split_null(lam: np.ndarray, vl: np.ndarray, vr: np.ndarray) -> np.ndarray:
    """
    Mask of eigenvalues produced by rounding inside a defective null block.

    A Jordan block at zero splits into eigenvalues of order ``eps^{1/m}``
    whose unit left and right vectors are almost orthogonal.
    """
    overlap = np.abs(np.einsum("ia,ia->a", vl.conj(), vr))
    with np.errstate(divide="ignore"):
        condition = np.where(overlap > 0.0, 1.0 / overlap, np.inf)
    return (np.abs(lam) <= const.SPLIT_NULL_MAGNITUDE) & (condition >= const.SPLIT_NULL_CONDITION)


def _dual_rows(rows: np.ndarray, vr: np.ndarray, label: str, charge: int) -> np.ndarray:
    """
    Rows ``L`` spanning the left eigenspaces with ``L @ vr = I``.

    Solved after the identity is pinned, then refined once against the
    final right vectors.
    """
    try:
        duals = la.solve(rows @ vr, rows)
    except la.LinAlgError as e:
        raise NumericalCheckError(f"{label}: singular left/right overlap in sector {charge:+d}") from e
    defect = np.eye(vr.shape[1]) - duals @ vr
    return duals + defect @ duals


def _pin_identity(lam: np.ndarray, vr: np.ndarray, identity: np.ndarray) -> np.ndarray:
    """Rescale the unit-eigenvalue eigenvector proportional to I to be exactly I."""
    if lam.size == 0:
        return vr
    cand = int(np.argmin(np.abs(lam - 1.0)))
    if abs(lam[cand] - 1.0) > 1e-8:
        return vr
    vec = vr[:, cand]
    proj = np.vdot(identity, vec) / np.vdot(identity, identity)
    if np.linalg.norm(vec - proj * identity) < 1e-8:
        vr = vr.copy()
        vr[:, cand] = identity
    return vr


def _warn_defective_clusters(
        lam: np.ndarray,
        rows: np.ndarray,
        vr: np.ndarray,
        tol: float,
        label: str,
) -> None:
    order = np.argsort(-np.abs(lam), kind="stable")
    start = 0
    while start < order.size:
        stop = start + 1
        while stop < order.size and abs(lam[order[stop]] - lam[order[start]]) <= tol * max(
            1.0, abs(lam[order[start]])
        ):
            stop += 1
        members = order[start:stop]
        gram = rows[members] @ vr[:, members]
        cond = np.linalg.cond(gram)
        if not np.isfinite(cond) or cond > _ILL_CONDITIONED:
            warnings.warn(
                SpectrumDegeneracyWarning(
                    f"{label}: near-defective eigenvalue cluster (condition {cond:.2e})",
                    lam[members].tolist(),
                ),
                stacklevel=3,
            )
        start = stop
