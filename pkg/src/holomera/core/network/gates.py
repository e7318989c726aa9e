from __future__ import annotations

"""
Analytic Wavelet Gates.

The disentangler ``u`` and isometry ``w`` are two-qubit unitaries built from
the mutually commuting Pauli products {II, ZZ, XY, YX}. Gates are stored as
``(2,2,2,2)`` tensors with legs (out_x, out_{x+1}, in_x, in_{x+1}). The
isometry's second input is the ancilla: ``v = w[..., 0]`` and
``v_flip = w[..., 1]`` (the hologron-carrying isometry).
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from holomera.core.lattice.hamiltonian import PAULI
from holomera.core.tensor import dagger
from holomera.domain.errors import NumericalCheckError

GateTensor = npt.NDArray[np.complex128]


def two_site_pauli(a: str, b: str) -> GateTensor:
    """Tensor of ``P_a (x) P_b`` on a site pair."""
    return np.einsum("ac,bd->abcd", PAULI[a], PAULI[b])


@dataclass(frozen=True, eq=False)
class GateSet:
    """
    Disentangler and isometry shared by all positions of a homogeneous network.

    Attributes:
        w: Isometry unitary, ancilla on its second input.
        u: Disentangler unitary.
    """
    w: GateTensor
    u: GateTensor

    def __post_init__(self) -> None:
        for name in ("w", "u"):
            gate = getattr(self, name)
            if gate.shape != (2, 2, 2, 2):
                raise NumericalCheckError(f"Gate {name} must have shape (2,2,2,2), got {gate.shape}")
            mat = gate.reshape(4, 4)
            if np.linalg.norm(mat.conj().T @ mat - np.eye(4)) > 1e-10:
                raise NumericalCheckError(f"Gate {name} is not unitary")

    @property
    def v(self) -> GateTensor:
        """Ground isometry ``w |.,0>``, shape (2, 2, 2) = (fine_l, fine_r, coarse)."""
        return self.w[..., 0]

    @property
    def v_flip(self) -> GateTensor:
        """Flipped isometry ``w |.,1>``."""
        return self.w[..., 1]

    def isometry_matrix(self, flipped: bool = False) -> GateTensor:
        return (self.v_flip if flipped else self.v).reshape(4, 2)


@lru_cache(maxsize=1)
def analytic_gates() -> GateSet:
    """
    Exact gates of the wavelet MERA for the critical chain.

    Returns:
        GateSet: ``w = (w^dagger)^dagger`` and ``u = (u^dagger)^dagger`` from the
        closed-form Pauli expansions of the conjugated gates.
    """
    s2, s3 = math.sqrt(2.0), math.sqrt(3.0)
    a0, a1 = (s3 + s2) / 4.0, (s3 - s2) / 4.0
    a2, a3 = (1.0 + s2) / 4.0, (1.0 - s2) / 4.0
    b0, b1 = (s3 + 2.0) / 4.0, (s3 - 2.0) / 4.0

    w_dag = (
        a0 * two_site_pauli("I", "I")
        + a1 * two_site_pauli("Z", "Z")
        + 1j * a2 * two_site_pauli("X", "Y")
        + 1j * a3 * two_site_pauli("Y", "X")
    )
    u_dag = (
        b0 * two_site_pauli("I", "I")
        + b1 * two_site_pauli("Z", "Z")
        + 0.25j * (two_site_pauli("X", "Y") + two_site_pauli("Y", "X"))
    )
    gates = GateSet(w=dagger(w_dag), u=dagger(u_dag))
    for arr in (gates.w, gates.u):
        arr.setflags(write=False)
    return gates


def check_flip_relation(gates: GateSet) -> float:
    """
    Residual of ``(Y (x) X) v Y = v_flip`` for the given gates.

    Holds for the analytic gates; gauge transforms generally break it.
    """
    yx = np.kron(PAULI["Y"], PAULI["X"])
    lhs = yx @ gates.isometry_matrix() @ PAULI["Y"]
    return float(np.linalg.norm(lhs - gates.isometry_matrix(flipped=True)))
