from __future__ import annotations

"""
Exact Diagonalization Reference.

Sparse construction of the boundary Hamiltonian and its ground state,
resolved by the global spin-flip parity ``prod_s Z_s``. Dense solvers are
used for small sectors and Lanczos (``eigsh``) above that.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import numpy.typing as npt
import scipy.linalg as la
import scipy.sparse as sp
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

from holomera.core.lattice.hamiltonian import energy_density_tensor, local_term, prefactor
from holomera.core.tensor import local_operator_sparse, popcount
from holomera.domain import constants as const
from holomera.domain.errors import CapacityError, SiteIndexError, SolverError

logger = logging.getLogger(__name__)

_DENSE_BLOCK_LIMIT = 4096
_PARITY_TIE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class EdResult:
    """
    Exact ground state of the boundary chain.

    Attributes:
        n_sites: Chain length.
        energy: Ground energy of ``N/(4 pi) sum h_s``.
        state: Normalized little-endian state vector.
        parity: Spin-flip parity (+1 or -1) of the selected sector.
        gap_to_other_sector: Lowest energy of the other sector minus ``energy``.
    """
    n_sites: int
    energy: float
    state: npt.NDArray[np.complex128]
    parity: int
    gap_to_other_sector: float

    @property
    def energy_density(self) -> float:
        """Per-site density of the unnormalized Hamiltonian."""
        return self.energy / prefactor(self.n_sites) / self.n_sites


def build_dense(n_sites: int) -> sp.csr_matrix:
    """
    Sparse matrix of ``N/(4 pi) sum_s h_s`` in the little-endian basis.

    Raises:
        CapacityError: If ``n_sites`` exceeds the dense limit.
    """
    if n_sites > const.MAX_DENSE_SITES:
        raise CapacityError(
            f"Dense Hamiltonian limited to {const.MAX_DENSE_SITES} sites, got {n_sites}"
        )
    return _build_sparse(n_sites)


def sector_projector(n_sites: int, parity: int) -> npt.NDArray[np.int64]:
    """Basis indices of the spin-flip sector with eigenvalue ``parity``."""
    idx = np.arange(2 ** n_sites, dtype=np.int64)
    odd = popcount(idx, n_sites) % 2
    return np.flatnonzero(odd == (0 if parity > 0 else 1))


def ed_ground(n_sites: int, iterative: bool = False) -> EdResult:
    """
    Ground state of the boundary chain by exact diagonalization.

    Both parity sectors are solved; on an exact tie the even sector wins.

    Args:
        n_sites: Even chain length, at most 16 (20 with ``iterative``).
        iterative: Allow Lanczos beyond the dense limit.

    Raises:
        CapacityError: Chain too long for the selected mode.
        SolverError: Lanczos failed to converge.
    """
    limit = const.MAX_ITERATIVE_SITES if iterative else const.MAX_DENSE_SITES
    if n_sites > limit:
        raise CapacityError(f"Exact diagonalization limited to {limit} sites, got {n_sites}")
    if n_sites < 4:
        raise SiteIndexError("Exact diagonalization needs at least 4 sites")

    h = _build_sparse(n_sites)
    solutions = {}
    for parity in (+1, -1):
        idx = sector_projector(n_sites, parity)
        block = h[idx][:, idx]
        solutions[parity] = (idx, *_lowest(block))

    e_even, e_odd = solutions[+1][1], solutions[-1][1]
    parity = -1 if e_odd < e_even - _PARITY_TIE_TOL else +1
    idx, energy, vec = solutions[parity]

    state = np.zeros(2 ** n_sites, dtype=np.complex128)
    state[idx] = vec / np.linalg.norm(vec)
    other = solutions[-parity][1]

    logger.info(f"ED N={n_sites}: E0={energy:.12f} parity={parity:+d} (other sector {other:.12f})")
    return EdResult(
        n_sites=n_sites,
        energy=float(energy),
        state=state,
        parity=parity,
        gap_to_other_sector=float(other - energy),
    )


def ed_energy_density(n_sites: int, iterative: bool = False) -> float:
    """Ground-energy density of the unnormalized chain, approaching ``-4/pi``."""
    return ed_ground(n_sites, iterative=iterative).energy_density


# -----------------------------------------------------------------------------
# PRIVATE HELPERS
# -----------------------------------------------------------------------------

def _build_sparse(n_sites: int) -> sp.csr_matrix:
    h_local = energy_density_tensor()
    total = sp.csr_matrix((2 ** n_sites, 2 ** n_sites), dtype=np.complex128)
    for s in range(n_sites):
        total = total + local_operator_sparse(h_local, local_term(s, n_sites).sites, n_sites)
    total = prefactor(n_sites) * total
    total.eliminate_zeros()
    return total.tocsr()


def _lowest(block: sp.csr_matrix) -> Tuple[float, npt.NDArray[np.complex128]]:
    dim = block.shape[0]
    if dim <= _DENSE_BLOCK_LIMIT:
        vals, vecs = la.eigh(block.toarray(), subset_by_index=[0, 0])
        return float(vals[0]), vecs[:, 0]
    try:
        vals, vecs = eigsh(block, k=1, which="SA", tol=1e-12, maxiter=20 * dim)
    except ArpackNoConvergence as e:
        raise SolverError(f"Lanczos failed to converge on a block of dimension {dim}") from e
    return float(vals[0]), vecs[:, 0]
