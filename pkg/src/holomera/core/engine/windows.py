from __future__ import annotations

"""
Batched Three-Site Window Engine.

The reduced density matrices of all three-site windows of one scale are
pushed through a layer in a single batched contraction: coarse window ``c``
(sites c, c+1, c+2) determines the fine windows starting at ``2c+1`` and
``2c+2``. Excited states only recompute windows inside the forward light
cone of their insertions; everything else is read from the cached ground
state. The adjoint (ascending) map yields the effective core Hamiltonian.

Windows are stored as ``(n, 8, 8)`` matrices, window ``x`` covering sites
``(x, x+1, x+2) mod n``; it carries the energy density centered at ``x+1``.
"""

import logging
import math
import threading
from dataclasses import dataclass
from typing import FrozenSet, List, Literal, Optional, Sequence

import numpy as np
import numpy.typing as npt

from holomera.core.lattice.hamiltonian import energy_density_tensor, prefactor
from holomera.core.network.mera import BulkCoordinate, LayerGates, MeraNetwork, flips_by_layer, validate_flips
from holomera.domain.constants import CORE_SITES, HERMITIAN_TOL
from holomera.domain.errors import ConfigError, NonHermitianError

logger = logging.getLogger(__name__)

Region = Literal["cone", "full"]
WindowArray = npt.NDArray[np.complex128]

_I2 = np.eye(2, dtype=np.complex128)


@dataclass(frozen=True, eq=False)
class WindowState:
    """
    Boundary window density matrices of one configuration.

    Attributes:
        windows: ``(N, 8, 8)`` reduced density matrices.
        dirty: Sorted indices of windows that may differ from the ground state.
    """
    windows: WindowArray
    dirty: npt.NDArray[np.int64]


# -----------------------------------------------------------------------------
# LAYER KERNELS
# -----------------------------------------------------------------------------

def core_windows(core: npt.NDArray[np.complex128]) -> WindowArray:
    """Three-site reduced density matrices of the 4-qubit core."""
    out = np.empty((CORE_SITES, 8, 8), dtype=np.complex128)
    for c in range(CORE_SITES):
        order = [(c + d) % CORE_SITES for d in range(CORE_SITES)]
        psi = np.transpose(core, order).reshape(8, 2)
        out[c] = psi @ psi.conj().T
    return out


def _block_isometry(layer: LayerGates, flipped: FrozenSet[int], starts: npt.NDArray[np.int64]) -> WindowArray:
    """Product isometry ``(z, 64, 8)`` of the three isometries under each coarse window."""
    n = layer.n_coarse
    anc = np.zeros(n, dtype=np.int64)
    if flipped:
        anc[list(flipped)] = 1
    mats = []
    for d in range(3):
        pos = (starts + d) % n
        mats.append(layer.w[pos, :, :, :, anc[pos]].reshape(-1, 4, 2))
    k = np.einsum("zia,zjb,zkc->zijkabc", mats[0], mats[1], mats[2])
    return k.reshape(-1, 64, 8)


def _block_disentangler(layer: LayerGates, starts: npt.NDArray[np.int64]) -> WindowArray:
    """Product ``u_c (x) u_{c+1}`` acting on block positions 1..4, shape ``(z, 16, 16)``."""
    n = layer.n_coarse
    u1 = layer.u[starts].reshape(-1, 4, 4)
    u2 = layer.u[(starts + 1) % n].reshape(-1, 4, 4)
    return np.einsum("zik,zjl->zijkl", u1, u2).reshape(-1, 16, 16)


def descend_layer(
        coarse: WindowArray,
        layer: LayerGates,
        flipped: FrozenSet[int],
        starts: npt.NDArray[np.int64],
) -> tuple[WindowArray, WindowArray]:
    """
    Push selected coarse windows through one layer.

    Args:
        coarse: ``(n, 8, 8)`` windows of the coarse scale.
        layer: Gates of the layer.
        flipped: Isometry positions carrying a hologron.
        starts: Coarse windows to process.

    Returns:
        tuple: Fine windows starting at ``2c+1`` and at ``2c+2`` for each ``c``.
    """
    k = _block_isometry(layer, flipped, starts)
    rho6 = k @ coarse[starts] @ k.conj().transpose(0, 2, 1)
    rho4 = np.einsum("zpiqpjq->zij", rho6.reshape(-1, 2, 16, 2, 2, 16, 2))
    u = _block_disentangler(layer, starts)
    rho4 = u @ rho4 @ u.conj().transpose(0, 2, 1)
    odd = np.einsum("zaibi->zab", rho4.reshape(-1, 8, 2, 8, 2))
    even = np.einsum("ziaib->zab", rho4.reshape(-1, 2, 8, 2, 8))
    return odd, even


def ascend_layer(fine_ops: WindowArray, layer: LayerGates) -> WindowArray:
    """
    Adjoint of :func:`descend_layer` over all windows.

    Args:
        fine_ops: ``(2n, 8, 8)`` operators, one per fine window.
        layer: Gates of the layer.

    Returns:
        WindowArray: ``(n, 8, 8)`` coarse operators with
        ``sum_c tr(rho_c O_c) = sum_x tr(rho_x fine_ops[x])``.
    """
    n = layer.n_coarse
    starts = np.arange(n)
    odd = fine_ops[(2 * starts + 1) % (2 * n)]
    even = fine_ops[(2 * starts + 2) % (2 * n)]
    o4 = np.einsum("zab,ij->zaibj", odd, _I2).reshape(-1, 16, 16)
    o4 = o4 + np.einsum("ij,zab->ziajb", _I2, even).reshape(-1, 16, 16)
    u = _block_disentangler(layer, starts)
    o4 = u.conj().transpose(0, 2, 1) @ o4 @ u
    o6 = np.einsum("pr,zij,qs->zpiqrjs", _I2, o4, _I2).reshape(-1, 64, 64)
    k = _block_isometry(layer, frozenset(), starts)
    return k.conj().transpose(0, 2, 1) @ o6 @ k


def embed_core_window(op: npt.NDArray[np.complex128], c: int) -> npt.NDArray[np.complex128]:
    """Place a window operator on core sites ``(c, c+1, c+2) mod 4`` as a 16x16 matrix."""
    order = [(c + d) % CORE_SITES for d in range(CORE_SITES)]
    full = np.kron(op, _I2).reshape((2,) * 8)
    perm = [order.index(q) for q in range(CORE_SITES)]
    return full.transpose(perm + [CORE_SITES + p for p in perm]).reshape(16, 16)


def window_energies(windows: WindowArray) -> npt.NDArray[np.float64]:
    """Unnormalized ``tr(rho_x h)`` for every window."""
    h = energy_density_tensor().reshape(8, 8)
    return np.einsum("zab,ba->z", windows, h).real


# -----------------------------------------------------------------------------
# ENGINE
# -----------------------------------------------------------------------------

class WindowEngine:
    """
    Cached window descent for one network.

    The ground-state windows of every scale are computed once (lazily, under
    a lock) and shared by all excited configurations.
    """

    def __init__(self, net: MeraNetwork) -> None:
        self._net = net
        self._lock = threading.Lock()
        self._ground: Optional[List[WindowArray]] = None

    @property
    def network(self) -> MeraNetwork:
        return self._net

    def ground_levels(self) -> List[WindowArray]:
        """Ground windows per scale, from the core (index 0) to the boundary."""
        with self._lock:
            if self._ground is None:
                levels = [core_windows(self._net.core)]
                for rho in self._net.layers:
                    starts = np.arange(2 ** rho)
                    odd, even = descend_layer(levels[-1], self._net.layer(rho), frozenset(), starts)
                    fine = np.empty((2 ** (rho + 1), 8, 8), dtype=np.complex128)
                    fine[(2 * starts + 1) % (2 ** (rho + 1))] = odd
                    fine[(2 * starts + 2) % (2 ** (rho + 1))] = even
                    levels.append(fine)
                self._ground = levels
                logger.debug(f"Ground windows cached for D={self._net.depth}")
        return self._ground

    def boundary_ground(self) -> WindowArray:
        return self.ground_levels()[-1]

    def descend(self, flips: Sequence[BulkCoordinate], region: Region = "cone") -> WindowState:
        """
        Boundary windows of the state with the given hologrons.

        Args:
            flips: Validated insertions.
            region: ``"cone"`` recomputes only windows inside the forward
                cones; ``"full"`` recomputes everything.

        Returns:
            WindowState: Windows and the indices that were recomputed.
        """
        if region not in ("cone", "full"):
            raise ConfigError(f"Unknown contraction region '{region}'")
        levels = self.ground_levels()
        by_layer = flips_by_layer(flips)

        current = levels[0]
        dirty = np.zeros(CORE_SITES, dtype=bool)
        if region == "full":
            dirty[:] = True

        for idx, rho in enumerate(self._net.layers, start=1):
            n = 2 ** rho
            flipped = by_layer.get(rho, frozenset())
            mark = dirty.copy()
            for s in flipped:
                mark[[s % n, (s - 1) % n, (s - 2) % n]] = True
            starts = np.flatnonzero(mark)

            fine_dirty = np.zeros(2 * n, dtype=bool)
            if starts.size == 0:
                current, dirty = levels[idx], fine_dirty
                continue

            odd, even = descend_layer(current, self._net.layer(rho), flipped, starts)
            fine = levels[idx].copy()
            fine[(2 * starts + 1) % (2 * n)] = odd
            fine[(2 * starts + 2) % (2 * n)] = even
            fine_dirty[(2 * starts + 1) % (2 * n)] = True
            fine_dirty[(2 * starts + 2) % (2 * n)] = True
            current, dirty = fine, fine_dirty

        return WindowState(windows=current, dirty=np.flatnonzero(dirty))

    def ground_energy(self) -> float:
        energies = window_energies(self.boundary_ground())
        return prefactor(self._net.n_sites) * math.fsum(energies.tolist())

    def excitation_energy(self, flips: Sequence[BulkCoordinate], region: Region = "cone") -> float:
        """``E(flips) - E_GS`` summed over recomputed windows only."""
        flips = validate_flips(flips, self._net.depth)
        state = self.descend(flips, region)
        ground = self.boundary_ground()
        diff = window_energies(state.windows[state.dirty] - ground[state.dirty])
        return prefactor(self._net.n_sites) * math.fsum(diff.tolist())

    def interaction_energy(self, x1: BulkCoordinate, x2: BulkCoordinate) -> float:
        """
        ``E(x1, x2) - E(x1) - E(x2) + E_GS``.

        Only windows reached by both cones contribute; disjoint cones give
        exactly zero.
        """
        validate_flips((x1, x2), self._net.depth)
        both = self.descend((x1, x2))
        one = self.descend((x1,))
        two = self.descend((x2,))
        shared = np.intersect1d(one.dirty, two.dirty)
        if shared.size == 0:
            return 0.0
        ground = self.boundary_ground()
        combo = ((both.windows[shared] - one.windows[shared]) - two.windows[shared]) + ground[shared]
        return prefactor(self._net.n_sites) * math.fsum(window_energies(combo).tolist())

    def effective_hamiltonian(self) -> npt.NDArray[np.complex128]:
        """
        Boundary Hamiltonian pulled back to the core, as a 16x16 matrix.

        Raises:
            NonHermitianError: If the result fails the Hermiticity check.
        """
        h = prefactor(self._net.n_sites) * energy_density_tensor().reshape(8, 8)
        ops = np.broadcast_to(h, (self._net.n_sites, 8, 8))
        for rho in reversed(self._net.layers):
            ops = ascend_layer(ops, self._net.layer(rho))
        h_eff = sum(embed_core_window(ops[c], c) for c in range(CORE_SITES))
        scale = max(1.0, float(np.linalg.norm(h_eff)))
        if np.linalg.norm(h_eff - h_eff.conj().T) > HERMITIAN_TOL * scale:
            raise NonHermitianError("Effective core Hamiltonian is not Hermitian")
        return 0.5 * (h_eff + h_eff.conj().T)
