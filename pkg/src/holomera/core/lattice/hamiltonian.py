from __future__ import annotations

"""
Boundary Chain Hamiltonian.

Three-site energy density of the critical chain
``h_s = X_{s-1} Z_s X_{s+1} - (X_{s-1} X_s + X_s X_{s+1}) / 2``, the
four-site momentum density ``p_s = i [h_s, h_{s-1}]`` and the boundary
operators used as primary-field proxies in correlator sweeps.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from holomera.core.tensor import LocalOperator, embed_operator, local_operator_sparse, operator_tensor
from holomera.domain.errors import SiteIndexError

logger = logging.getLogger(__name__)

PAULI: Dict[str, np.ndarray] = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}


def pauli_string(labels: str) -> np.ndarray:
    """Tensor (legs out..., in...) of a Pauli product such as ``"XZX"``."""
    mat = np.ones((1, 1), dtype=np.complex128)
    for ch in labels:
        mat = np.kron(mat, PAULI[ch])
    return operator_tensor(mat)


def prefactor(n_sites: int) -> float:
    """Normalization ``N / (4 pi)`` fixing the velocity to one."""
    return n_sites / (4.0 * math.pi)


@lru_cache(maxsize=1)
def energy_density_tensor() -> np.ndarray:
    """Unnormalized three-site energy density as a read-only tensor."""
    h = pauli_string("XZX") - 0.5 * (pauli_string("XXI") + pauli_string("IXX"))
    h.setflags(write=False)
    return h


@lru_cache(maxsize=1)
def _momentum_tensor() -> np.ndarray:
    h = energy_density_tensor().reshape(8, 8)
    h_s = embed_operator(h, 4, 1)
    h_prev = embed_operator(h, 4, 0)
    p = 1j * (h_s @ h_prev - h_prev @ h_s)
    t = operator_tensor(p)
    t.setflags(write=False)
    return t


def sigma_proxy() -> np.ndarray:
    """Single-site proxy of the spin primary."""
    return pauli_string("X")


def epsilon_proxy() -> np.ndarray:
    """Three-site proxy of the energy primary (sign-flipped dimerization)."""
    return pauli_string("XZX") + 0.5 * (pauli_string("XXI") + pauli_string("IXX"))


# -----------------------------------------------------------------------------
# LOCAL TERMS
# -----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LocalTerm(LocalOperator):
    """Energy density centered on ``center``; support ``(center-1, center, center+1)``."""
    center: int = 0


def local_term(s: int, n_sites: int) -> LocalTerm:
    """
    Energy density ``h_s`` on a periodic chain.

    Raises:
        SiteIndexError: If ``s`` is outside ``[0, n_sites)``.
    """
    _check_site(s, n_sites)
    sites = ((s - 1) % n_sites, s, (s + 1) % n_sites)
    return LocalTerm(sites=sites, tensor=energy_density_tensor(), center=s)


def momentum_density(s: int, n_sites: int) -> LocalOperator:
    """
    Momentum density ``p_s = i [h_s, h_{s-1}]`` on sites ``s-2 .. s+1``.

    Raises:
        SiteIndexError: If ``s`` is outside ``[0, n_sites)``.
    """
    _check_site(s, n_sites)
    sites = tuple((s + d) % n_sites for d in (-2, -1, 0, 1))
    return LocalOperator(sites=sites, tensor=_momentum_tensor())


@dataclass(frozen=True)
class ChainHamiltonian:
    """
    Periodic chain ``H = N/(4 pi) * sum_s h_s``.

    Attributes:
        n_sites: Number of boundary sites N.
    """
    n_sites: int

    @property
    def prefactor(self) -> float:
        return prefactor(self.n_sites)

    def terms(self) -> List[LocalTerm]:
        return [local_term(s, self.n_sites) for s in range(self.n_sites)]


# -----------------------------------------------------------------------------
# CONTINUITY
# -----------------------------------------------------------------------------

def continuity_residual(n_sites: int, s: int = 0) -> float:
    """
    Frobenius norm of ``i[H, h_s] - (p_{s+1} - p_s)`` with unnormalized H.

    The chain must be small enough for dense lifting (``n_sites >= 6``).

    Returns:
        float: The residual, zero up to rounding for this density.
    """
    if n_sites < 6:
        raise SiteIndexError("Continuity check needs at least 6 sites")
    h_ops = [local_term(t, n_sites) for t in range(n_sites)]
    big_h = sum(
        (local_operator_sparse(t.tensor, t.sites, n_sites) for t in h_ops),
        start=sp.csr_matrix((2 ** n_sites, 2 ** n_sites), dtype=np.complex128),
    )
    hs = local_operator_sparse(h_ops[s].tensor, h_ops[s].sites, n_sites)
    p_next = momentum_density((s + 1) % n_sites, n_sites)
    p_here = momentum_density(s, n_sites)
    lhs = 1j * (big_h @ hs - hs @ big_h)
    rhs = local_operator_sparse(p_next.tensor, p_next.sites, n_sites) - local_operator_sparse(
        p_here.tensor, p_here.sites, n_sites
    )
    residual = float(spla.norm(lhs - rhs))
    logger.debug(f"Continuity residual at N={n_sites}, s={s}: {residual:.3e}")
    return residual


def _check_site(s: int, n_sites: int) -> None:
    if not (0 <= s < n_sites):
        raise SiteIndexError(f"Site {s} out of range [0, {n_sites})")

