from __future__ import annotations

"""
Conformal Projection Protocol.

Identifies the stress tensor and the first descendants of the energy
primary inside the four-fold degenerate dimension-2 eigenspace. Lattice
trial operators (a Koo-Saleur style combination of energy and momentum
densities, and discrete space/time derivatives of the energy primary) are
projected onto that eigenspace, and duals are built so that each labeled
operator has its own left partner.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np
import numpy.typing as npt

from holomera.core.lattice.hamiltonian import energy_density_tensor, momentum_density
from holomera.core.network.gates import GateSet, analytic_gates
from holomera.core.spectra.decomposition import ScalingSpectrum, eigendecompose
from holomera.core.spectra.superoperator import build_superoperator
from holomera.core.tensor import embed_operator, hermitian_part, operator_matrix
from holomera.domain import constants as const
from holomera.domain.errors import ConfigError, DegeneracyError, NoSuchDimensionError

logger = logging.getLogger(__name__)

STRESS_LABELS = ("T", "Tbar", "d_eps", "dbar_eps")
_STRESS_MULTIPLICITY = 4
_RANK_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class StressOperators:
    """
    Labeled operators of the dimension-2 group.

    Attributes:
        k: Window size of the spectrum they live in.
        center: Window position of the lattice site ``s`` used for the trials.
        right: Projected operators keyed by label (plus completion entries),
            each of unit Frobenius norm.
        left: Dual operators with ``tr(left[a] @ right[b]) = delta_ab``.
        c_T: ``tr(phi_T^L h)``, the weight of the unit-norm stress tensor in ``h``.
        c_Tbar: ``tr(phi_Tbar^L h)``.
        group_delta: Mean dimension of the projected group.
    """
    k: int
    center: int
    right: Dict[str, npt.NDArray[np.complex128]]
    left: Dict[str, npt.NDArray[np.complex128]]
    c_T: float
    c_Tbar: float
    group_delta: float
    group_indices: Tuple[int, ...] = field(default=())

    @property
    def c(self) -> float:
        return 0.5 * (self.c_T + self.c_Tbar)


# -----------------------------------------------------------------------------
# PROJECTION
# -----------------------------------------------------------------------------

def conformal_project(
        op: npt.ArrayLike,
        delta: float,
        spectrum: ScalingSpectrum,
        tol: float = const.DELTA_GROUP_TOL,
) -> npt.NDArray[np.complex128]:
    """
    Project an operator onto the right eigenoperators of dimension ``delta``.

    Args:
        op: k-site operator (matrix or tensor).
        delta: Target scaling dimension.
        spectrum: Spectrum of a k-site superoperator.
        tol: Grouping tolerance in dimension units.

    Returns:
        np.ndarray: Projected operator as a matrix.

    Raises:
        NoSuchDimensionError: No eigenvalue within ``tol`` of ``delta``.
    """
    idx = spectrum.group_indices(delta, tol)
    if not idx:
        raise NoSuchDimensionError(f"No scaling dimension within {tol} of {delta}")
    mat = _as_matrix(op, spectrum)
    coeffs = np.einsum("axw,wx->a", spectrum.left[idx], mat)
    return np.einsum("a,awx->wx", coeffs, spectrum.right[idx])


def hologron_conjugator(gates: Optional[GateSet] = None) -> npt.NDArray[np.complex128]:
    """
    Four-site unitary realizing a flipped ancilla at the outermost layer.

    Sites ``(2s-1, 2s, 2s+1, 2s+2)``: the isometry output pair sits in the
    middle and the two disentanglers touching it dress the ancilla flip,
    ``U (I (x) w X_anc w^dagger (x) I) U^dagger``.
    """
    gates = gates if gates is not None else analytic_gates()
    w = gates.w.reshape(4, 4)
    u = gates.u.reshape(4, 4)
    x_anc = np.kron(np.eye(2), np.array([[0, 1], [1, 0]]))
    inner = w @ x_anc @ w.conj().T
    middle = np.kron(np.kron(np.eye(2), inner), np.eye(2))
    outer = np.kron(u, u)
    return outer @ middle @ outer.conj().T


def conjugator_placements(k: int, gates: Optional[GateSet] = None) -> List[npt.NDArray[np.complex128]]:
    """All placements of the hologron conjugator inside a k-site window."""
    xt = hologron_conjugator(gates)
    return [embed_operator(xt, k, off) for off in range(k - 3)]


def place_conjugator(k: int, offset: int, gates: Optional[GateSet] = None) -> npt.NDArray[np.complex128]:
    """
    Conjugator on window sites ``offset .. offset + 3``.

    Its first site is the left leg of a disentangler, so the support of
    ``X~ h X~ - h`` starts on a disentangler for any ``offset`` up to the
    first site of the energy density it dresses.

    Raises:
        ConfigError: The conjugator does not fit in the window.
    """
    if not 0 <= offset <= k - 4:
        raise ConfigError(f"Conjugator offset {offset} does not fit a {k}-site window")
    return embed_operator(hologron_conjugator(gates), k, offset)


# -----------------------------------------------------------------------------
# STRESS TENSOR AND DESCENDANTS
# -----------------------------------------------------------------------------

def extract_stress_and_descendants(
        spectrum: ScalingSpectrum,
        epsilon_spectrum: Optional[ScalingSpectrum] = None,
        gates: Optional[GateSet] = None,
        velocity: float = const.VELOCITY,
) -> StressOperators:
    """
    Label the dimension-2 group by projecting lattice trial operators.

    Trials on a window centered at site ``s = 2``: ``(h_s +- v p_s) / 2``
    and ``d_x phi_eps +- (1/v) d_t phi_eps`` with ``d_x phi = phi(s+1) - phi(s)``
    and ``d_t phi = i [H_window, phi]``.

    Args:
        spectrum: Spectrum of a k-site superoperator with ``k >= 5``.
        epsilon_spectrum: Three-site spectrum providing the energy primary
            (built from the averaged three-site superoperator if omitted).
        gates: Gates used for the default three-site spectrum.
        velocity: Emergent velocity ``v``.

    Raises:
        ConfigError: ``spectrum.k < 5``.
        DegeneracyError: The dimension-2 group has fewer than four members
            or the projected trials are linearly dependent.
    """
    k = spectrum.k
    if k < const.MIN_STRESS_K:
        raise ConfigError(
            f"Stress-tensor protocol needs a window of at least {const.MIN_STRESS_K} sites, got k={k}"
        )
    center = 2
    group = spectrum.group_indices(2.0)
    if len(group) < _STRESS_MULTIPLICITY:
        raise DegeneracyError(
            f"Dimension-2 group has multiplicity {len(group)}, need {_STRESS_MULTIPLICITY}"
        )

    if epsilon_spectrum is None:
        epsilon_spectrum = eigendecompose(build_superoperator(3, "average", gates))

    h3 = energy_density_tensor().reshape(8, 8)
    h = embed_operator(h3, k, center - 1)
    p = embed_operator(momentum_density(center, k).tensor, k, center - 2)

    eps_idx = epsilon_spectrum.closest(1.0, charge=+1)
    phi_eps = hermitian_part(epsilon_spectrum.right[eps_idx])
    phi_here = embed_operator(phi_eps, k, center - 1)
    phi_next = embed_operator(phi_eps, k, center)
    h_window = sum(embed_operator(h3, k, t - 1) for t in range(1, k - 1))
    d_x = phi_next - phi_here
    d_t = 1j * (h_window @ phi_here - phi_here @ h_window)

    trials = {
        "T": 0.5 * (h + velocity * p),
        "Tbar": 0.5 * (h - velocity * p),
        "d_eps": d_x + d_t / velocity,
        "dbar_eps": d_x - d_t / velocity,
    }

    left_g = spectrum.left[group]
    right_g = spectrum.right[group]
    coords = np.stack(
        [np.einsum("axw,wx->a", left_g, trials[lab]) for lab in STRESS_LABELS], axis=1
    )
    svals = np.linalg.svd(coords, compute_uv=False)
    if svals[-1] <= _RANK_TOL * svals[0]:
        raise DegeneracyError("Projected trial operators are linearly dependent")

    labels = list(STRESS_LABELS)
    coords, labels = _complete_basis(coords, labels)
    duals = np.linalg.solve(coords, np.eye(coords.shape[0]))

    right: Dict[str, np.ndarray] = {}
    left: Dict[str, np.ndarray] = {}
    for i, lab in enumerate(labels):
        r = np.einsum("a,awx->wx", coords[:, i], right_g)
        norm = float(np.linalg.norm(r))
        right[lab] = r / norm
        left[lab] = norm * np.einsum("a,axw->xw", duals[i], left_g)

    # Unit-norm right operators: h projects to c_T phi_T + c_Tbar phi_Tbar.
    c_t = float(np.trace(left["T"] @ h).real)
    c_tbar = float(np.trace(left["Tbar"] @ h).real)
    delta = float(np.mean(spectrum.deltas[group]))
    logger.info(f"Stress tensor labeled in k={k} window: c_T={c_t:.6f} c_Tbar={c_tbar:.6f}")
    return StressOperators(
        k=k,
        center=center,
        right=right,
        left=left,
        c_T=c_t,
        c_Tbar=c_tbar,
        group_delta=delta,
        group_indices=tuple(group),
    )


def _complete_basis(coords: np.ndarray, labels: List[str]) -> Tuple[np.ndarray, List[str]]:
    """Extend the labeled coordinates with eigenvectors of the group to a full basis."""
    m = coords.shape[0]
    cols = [coords[:, i] for i in range(coords.shape[1])]
    out_labels = list(labels)
    for a in range(m):
        if len(cols) == m:
            break
        trial = np.stack(cols + [np.eye(m)[:, a]], axis=1)
        if np.linalg.matrix_rank(trial, tol=_RANK_TOL) == len(cols) + 1:
            cols.append(np.eye(m)[:, a])
            out_labels.append(f"delta2_extra{a}")
    return np.stack(cols, axis=1), out_labels


def _as_matrix(op: npt.ArrayLike, spectrum: ScalingSpectrum) -> np.ndarray:
    mat = np.asarray(op)
    if mat.ndim != 2:
        mat = operator_matrix(mat)
    d = 2 ** spectrum.k
    if mat.shape != (d, d):
        raise ConfigError(f"Operator of shape {mat.shape} does not fit a {spectrum.k}-site spectrum")
    return mat
