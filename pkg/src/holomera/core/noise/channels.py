from __future__ import annotations

"""
Gate Error Channels.

Two noise models for the preparation circuit:

* control errors: ``g -> g exp(i sum_S theta_S S)`` over the 15 non-trivial
  two-qubit Pauli strings, ``theta_S ~ Uniform[0, 2 pi eps)``;
* dephasing: ``g -> g (Z^a (x) Z^b)`` with branch weights
  ``(1-eps)^2, eps(1-eps), eps(1-eps), eps^2``.

Fidelities are average two-qubit gate fidelities
``E[(|tr(g^dagger g')|^2 + d) / (d (d+1))]`` with ``d = 4``.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
import numpy.typing as npt
import scipy.linalg as la

from holomera.core.lattice.hamiltonian import PAULI
from holomera.domain.errors import ParameterError

logger = logging.getLogger(__name__)

GATE_DIM = 4
NOISE_KINDS = ("control", "dephasing")

# Dephasing branches in the order (11, 1Z, Z1, ZZ)
DEPHASING_BRANCHES: Tuple[Tuple[str, str], ...] = (("I", "I"), ("I", "Z"), ("Z", "I"), ("Z", "Z"))


@dataclass(frozen=True)
class NoiseModel:
    """
    Noise applied independently to every gate of the circuit.

    Attributes:
        kind: ``control`` or ``dephasing``.
        eps: Noise strength.
        seed: Master seed of the per-location random streams.
        centered: Draw control angles from ``[-pi eps, pi eps)`` instead of ``[0, 2 pi eps)``.
    """
    kind: str
    eps: float
    seed: int = 0
    centered: bool = False

    def __post_init__(self) -> None:
        if self.kind not in NOISE_KINDS:
            raise ParameterError(f"Unknown noise kind '{self.kind}'")
        if self.eps < 0.0 or (self.kind == "dephasing" and self.eps > 1.0):
            raise ParameterError(f"Invalid noise strength {self.eps} for {self.kind} noise")

    @property
    def is_ideal(self) -> bool:
        return self.eps == 0.0

    @property
    def tag(self) -> str:
        return f"{self.kind}:{self.eps:g}"


@dataclass(frozen=True)
class KrausSet:
    """Kraus operators ``(m, 4, 4)`` of a two-qubit channel."""
    operators: npt.NDArray[np.complex128]

    def completeness_residual(self) -> float:
        total = np.einsum("kji,kjl->il", self.operators.conj(), self.operators)
        return float(np.linalg.norm(total - np.eye(self.operators.shape[-1])))


# -----------------------------------------------------------------------------
# CONTROL ERRORS
# -----------------------------------------------------------------------------

@lru_cache(maxsize=1)
def pauli_generators() -> npt.NDArray[np.complex128]:
    """The 15 non-trivial two-qubit Pauli strings as ``(15, 4, 4)`` matrices."""
    mats = [
        np.kron(PAULI[a], PAULI[b])
        for a, b in itertools.product("IXYZ", repeat=2)
        if (a, b) != ("I", "I")
    ]
    out = np.stack(mats)
    out.setflags(write=False)
    return out


def control_angles(rng: np.random.Generator, eps: float, size: int, centered: bool = False) -> np.ndarray:
    """Angles ``(size, 15)`` drawn uniformly from ``[0, 2 pi eps)`` (or centered on zero)."""
    lo, hi = (-math.pi * eps, math.pi * eps) if centered else (0.0, 2.0 * math.pi * eps)
    return rng.uniform(lo, hi, size=(size, 15))


def control_rotations(angles: np.ndarray) -> npt.NDArray[np.complex128]:
    """Unitaries ``exp(i sum_S theta_S S)`` for each row of ``angles``."""
    generators = np.einsum("ns,sij->nij", angles, pauli_generators())
    return la.expm(1j * generators)


def sample_control_gate(
        gate: npt.ArrayLike,
        eps: float,
        rng: np.random.Generator,
        centered: bool = False,
) -> npt.NDArray[np.complex128]:
    """
    Draw one control-error realization of a two-qubit gate.

    Args:
        gate: ``(2,2,2,2)`` tensor or ``4x4`` matrix.
        eps: Noise strength.
        rng: Random stream.
        centered: Use the zero-centered angle distribution.

    Returns:
        np.ndarray: Perturbed gate in the shape of ``gate``.
    """
    g = np.asarray(gate, dtype=np.complex128)
    if eps == 0.0:
        return g.copy()
    rot = control_rotations(control_angles(rng, eps, 1, centered))[0]
    return (g.reshape(4, 4) @ rot).reshape(g.shape)


def control_error_fidelity(
        eps: float,
        n_samples: int,
        seed: int = 0,
        centered: bool = False,
) -> Tuple[float, float]:
    """
    Monte-Carlo average gate fidelity under control errors.

    Returns:
        Tuple[float, float]: Mean fidelity and its standard error.
    """
    rng = np.random.default_rng(seed)
    rots = control_rotations(control_angles(rng, eps, n_samples, centered))
    traces = np.abs(np.trace(rots, axis1=1, axis2=2)) ** 2
    values = (traces + GATE_DIM) / (GATE_DIM * (GATE_DIM + 1))
    return _mean_stderr(values)


# -----------------------------------------------------------------------------
# DEPHASING
# -----------------------------------------------------------------------------

def dephasing_weights(eps: float) -> npt.NDArray[np.float64]:
    """Branch probabilities ``(1-eps)^2, eps(1-eps), eps(1-eps), eps^2``."""
    if not (0.0 <= eps <= 1.0):
        raise ParameterError(f"Dephasing strength {eps} outside [0, 1]")
    return np.array([(1 - eps) ** 2, eps * (1 - eps), eps * (1 - eps), eps ** 2])


@lru_cache(maxsize=1)
def dephasing_patterns() -> npt.NDArray[np.complex128]:
    out = np.stack([np.kron(PAULI[a], PAULI[b]) for a, b in DEPHASING_BRANCHES])
    out.setflags(write=False)
    return out


def dephasing_kraus(eps: float, gate: npt.ArrayLike | None = None) -> KrausSet:
    """
    Kraus operators ``sqrt(p_ab) g (Z^a (x) Z^b)`` of the dephased gate.

    Zero-weight branches are dropped, so ``eps = 0`` yields the ideal gate alone.

    Raises:
        ParameterError: ``eps`` outside ``[0, 1]``.
    """
    weights = dephasing_weights(eps)
    g = np.eye(4, dtype=np.complex128) if gate is None else np.asarray(gate, dtype=np.complex128).reshape(4, 4)
    ops = [math.sqrt(p) * g @ pat for p, pat in zip(weights, dephasing_patterns()) if p > 0.0]
    return KrausSet(np.stack(ops))


def sample_dephasing_branches(rng: np.random.Generator, eps: float, size: int) -> npt.NDArray[np.int64]:
    """Branch indices into :data:`DEPHASING_BRANCHES` drawn with their Born weights."""
    return rng.choice(len(DEPHASING_BRANCHES), size=size, p=dephasing_weights(eps))


def sample_dephasing_gate(
        gate: npt.ArrayLike,
        eps: float,
        rng: np.random.Generator,
) -> npt.NDArray[np.complex128]:
    """Draw one branch of the dephased gate."""
    g = np.asarray(gate, dtype=np.complex128)
    if eps == 0.0:
        return g.copy()
    branch = int(sample_dephasing_branches(rng, eps, 1)[0])
    return (g.reshape(4, 4) @ dephasing_patterns()[branch]).reshape(g.shape)


def dephasing_fidelity_closed_form(eps: float) -> float:
    """``(d (1-eps)^2 + 1) / (d + 1)``."""
    dephasing_weights(eps)
    return (GATE_DIM * (1.0 - eps) ** 2 + 1.0) / (GATE_DIM + 1.0)


def dephasing_fidelity_monte_carlo(eps: float, n_samples: int, seed: int = 0) -> Tuple[float, float]:
    """Monte-Carlo gate fidelity of the dephasing channel (mean, standard error)."""
    rng = np.random.default_rng(seed)
    branches = sample_dephasing_branches(rng, eps, n_samples)
    traces = np.abs(np.trace(dephasing_patterns(), axis1=1, axis2=2)) ** 2
    values = (traces[branches] + GATE_DIM) / (GATE_DIM * (GATE_DIM + 1))
    return _mean_stderr(values)


def gate_fidelity(noise: NoiseModel, n_samples: int = 10000) -> float:
    """Gate fidelity associated with a noise model (closed form where available)."""
    if noise.kind == "dephasing":
        return dephasing_fidelity_closed_form(noise.eps)
    return control_error_fidelity(noise.eps, n_samples, noise.seed, noise.centered)[0]


def _mean_stderr(values: np.ndarray) -> Tuple[float, float]:
    n = values.size
    mean = float(np.mean(values))
    err = float(np.std(values, ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return mean, err
