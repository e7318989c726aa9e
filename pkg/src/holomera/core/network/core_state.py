from __future__ import annotations

"""
Core State Optimization.

The 4-qubit core is the lowest eigenvector of the boundary Hamiltonian
pulled back through all layers. The eigenproblem is solved per spin-flip
parity sector; on a tie the even sector is chosen.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Optional

import numpy as np
import numpy.typing as npt
import scipy.linalg as la

from holomera.core.engine.windows import WindowEngine
from holomera.core.lattice.exact import ed_ground
from holomera.core.network.gates import GateSet
from holomera.core.network.gauge import CANONICAL_GAUGE, HologronGauge
from holomera.core.network.mera import MeraNetwork, assemble_network
from holomera.core.network.statevector import boundary_vector
from holomera.core.tensor import popcount
from holomera.domain import constants as const
from holomera.domain.errors import CapacityError, ConfigError

logger = logging.getLogger(__name__)

_TIE_TOL = 1e-10
OVERLAP_EXPONENTS = (1, 2)


def optimize_core(net: MeraNetwork) -> npt.NDArray[np.complex128]:
    """
    Ground state of the effective core Hamiltonian.

    Args:
        net: Network whose gates are fixed (the current core is ignored).

    Returns:
        np.ndarray: Normalized core of shape ``(2, 2, 2, 2)`` with its largest
        amplitude made real and positive.
    """
    h = WindowEngine(net).effective_hamiltonian()
    even = popcount(np.arange(16), 4) % 2 == 0
    odd = ~even
    scale = max(1.0, float(np.linalg.norm(h)))

    if np.linalg.norm(h[np.ix_(even, odd)]) <= const.HERMITIAN_TOL * scale:
        sectors = {}
        for parity, mask in ((+1, even), (-1, odd)):
            vals, vecs = la.eigh(h[np.ix_(mask, mask)])
            sectors[parity] = (float(vals[0]), mask, vecs[:, 0])
        parity = -1 if sectors[-1][0] < sectors[+1][0] - _TIE_TOL else +1
        energy, mask, sub = sectors[parity]
        vec = np.zeros(16, dtype=np.complex128)
        vec[mask] = sub
    else:
        logger.warning("Effective Hamiltonian breaks spin-flip symmetry; solving without sectors")
        vals, vecs = la.eigh(h)
        energy, vec, parity = float(vals[0]), vecs[:, 0].astype(np.complex128), 0

    k = int(np.argmax(np.abs(vec)))
    vec = vec * (np.conj(vec[k]) / abs(vec[k]))
    vec = vec / np.linalg.norm(vec)
    logger.debug(f"Core optimized for D={net.depth}: E={energy:.12f} parity={parity:+d}")
    return vec.reshape(2, 2, 2, 2)


def build_network(
        depth: int,
        gates: Optional[GateSet] = None,
        gauge: HologronGauge = CANONICAL_GAUGE,
) -> MeraNetwork:
    """
    Assemble a network and optimize its core.

    Args:
        depth: Number of scales D (N = 2**D boundary sites).
        gates: Gates to use; the analytic wavelet gates by default.
        gauge: Hologron gauge applied to the isometry.

    Returns:
        MeraNetwork: Network with optimal core.
    """
    draft = assemble_network(depth, gates=gates, gauge=gauge)
    net = draft.with_core(optimize_core(draft))
    logger.info(f"Built MERA network D={depth} (N={net.n_sites}), gauge={gauge}")
    return net


# -----------------------------------------------------------------------------
# OVERLAP WITH EXACT DIAGONALIZATION
# -----------------------------------------------------------------------------

def overlap_with_ed(net: MeraNetwork) -> float:
    """
    ``|<psi_MERA|psi_ED>|`` for ``N <= 16``.

    Raises:
        CapacityError: For networks beyond the dense limit.
    """
    if net.n_sites > const.MAX_DENSE_SITES:
        raise CapacityError(f"Overlap limited to N <= {const.MAX_DENSE_SITES}")
    ed = ed_ground(net.n_sites)
    return float(abs(np.vdot(ed.state, boundary_vector(net))))


@dataclass(frozen=True)
class OverlapConvention:
    """
    Outcome of matching overlap densities against reference values.

    Attributes:
        exponent: Exponent reproducing every reference size, else the one
            with the smallest squared error.
        densities: Per-site overlaps keyed by exponent, then by N.
        errors: Summed squared error per exponent.
        matched: Whether the chosen exponent hits each reference within ``tol``.
        tol: Absolute tolerance used for ``matched``.
    """
    exponent: int
    densities: Dict[int, Dict[int, float]]
    errors: Dict[int, float]
    matched: Dict[int, bool]
    tol: float

    @property
    def reproduces_reference(self) -> bool:
        return all(self.matched.values())


def overlap_density(overlap: float, n_sites: int, exponent: int = const.PINNED_OVERLAP_EXPONENT) -> float:
    """Per-site overlap ``|<.|.>|^{exponent/N}``."""
    if exponent not in OVERLAP_EXPONENTS:
        raise ConfigError(f"Overlap exponent must be 1 or 2, got {exponent}")
    return float(overlap ** (exponent / n_sites))


def pin_overlap_convention(
        overlaps: Mapping[int, float],
        reference: Mapping[int, float] = const.REFERENCE_OVERLAP_DENSITY,
        tol: float = const.OVERLAP_DENSITY_TOL,
) -> OverlapConvention:
    """
    Compare both overlap-density exponents with the reference densities.

    The exponent with the smallest squared error is reported together with
    which system sizes it reproduces; a warning is logged when it misses any.

    Args:
        overlaps: Raw overlaps keyed by N.
        reference: Reference densities keyed by N.
        tol: Absolute tolerance for a size to count as reproduced.

    Returns:
        OverlapConvention: Chosen exponent and per-size verdicts.

    Raises:
        ConfigError: No system size is shared with the reference.
    """
    common = sorted(set(overlaps) & set(reference))
    if not common:
        raise ConfigError("No common system sizes to pin the overlap convention")
    densities = {
        e: {n: overlap_density(overlaps[n], n, e) for n in common} for e in OVERLAP_EXPONENTS
    }
    errors = {e: sum((densities[e][n] - reference[n]) ** 2 for n in common) for e in OVERLAP_EXPONENTS}
    hits = {e: {n: abs(densities[e][n] - reference[n]) <= tol for n in common} for e in OVERLAP_EXPONENTS}
    best = min(OVERLAP_EXPONENTS, key=lambda e: (not all(hits[e].values()), errors[e]))
    matched = hits[best]
    result = OverlapConvention(best, densities, errors, matched, tol)

    if result.reproduces_reference:
        logger.info(f"Overlap convention pinned to exponent {best} (squared errors {errors})")
    else:
        missed = ", ".join(
            f"N={n}: {densities[best][n]:.4f} vs {reference[n]}" for n in common if not matched[n]
        )
        logger.warning(f"No overlap exponent reproduces the reference densities; closest is {best} ({missed})")
    return result


def reference_overlap_match(
        density: float,
        n_sites: int,
        reference: Mapping[int, float] = const.REFERENCE_OVERLAP_DENSITY,
        tol: float = const.OVERLAP_DENSITY_TOL,
) -> Dict[str, Optional[object]]:
    """Reference density for ``n_sites`` and whether ``density`` lies within ``tol`` of it."""
    ref = reference.get(n_sites)
    if ref is None:
        return {"overlap_reference": None, "overlap_matches_reference": None}
    matches = abs(density - ref) <= tol
    if not matches:
        logger.warning(f"Overlap density {density:.4f} at N={n_sites} misses the reference {ref} (tol {tol})")
    return {"overlap_reference": float(ref), "overlap_matches_reference": bool(matches)}
