from __future__ import annotations

"""
Dense Tensor Primitives.

Qubit operators on k sites are stored as arrays of shape ``(2,)*2k`` with
legs ordered (out_0 .. out_{k-1}, in_0 .. in_{k-1}); site 0 is the leftmost
factor. ``operator_matrix`` is therefore a C-order reshape in which the
leftmost site is the most significant bit. Full boundary state vectors use
the opposite (little-endian) convention: bit s of the basis index is the
state of site s. Conversion helpers for both are provided here.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np
import numpy.typing as npt
import scipy.sparse as sp

from holomera.domain.constants import HERMITIAN_TOL
from holomera.domain.errors import (
    ContractShapeError,
    DuplicateLegError,
    LegPartitionError,
    NumericalCheckError,
    SiteIndexError,
)

ComplexArray = npt.NDArray[np.complex128]


# -----------------------------------------------------------------------------
# LOCAL OPERATOR MODEL
# -----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LocalOperator:
    """
    Operator acting on an explicit list of boundary sites.

    Attributes:
        sites: Distinct site indices, in the order of the tensor legs.
        tensor: Array of shape ``(2,)*2m`` for ``m = len(sites)``.
    """
    sites: Tuple[int, ...]
    tensor: ComplexArray

    def __post_init__(self) -> None:
        if len(set(self.sites)) != len(self.sites):
            raise SiteIndexError(f"Repeated site in operator support {self.sites}")
        expected = (2,) * (2 * len(self.sites))
        if self.tensor.shape != expected:
            raise ContractShapeError(
                f"Operator on {len(self.sites)} sites needs shape {expected}, "
                f"got {self.tensor.shape}"
            )

    @property
    def n_sites(self) -> int:
        return len(self.sites)

    def matrix(self) -> ComplexArray:
        return operator_matrix(self.tensor)

    def shifted(self, offset: int, n_sites: int) -> "LocalOperator":
        """Translate the support by ``offset`` on a ring of ``n_sites``."""
        return LocalOperator(tuple((x + offset) % n_sites for x in self.sites), self.tensor)


# -----------------------------------------------------------------------------
# CONTRACTION
# -----------------------------------------------------------------------------

def contract(
        a: npt.ArrayLike,
        b: npt.ArrayLike,
        pairs: Sequence[Tuple[int, int]],
) -> ComplexArray:
    """
    Contract legs of ``a`` with legs of ``b``.

    Remaining legs of ``a`` come first, then those of ``b``, each in their
    original order.

    Args:
        a: First tensor.
        b: Second tensor.
        pairs: (leg of a, leg of b) pairs to sum over.

    Returns:
        ComplexArray: The contracted tensor.

    Raises:
        DuplicateLegError: A leg is used twice.
        ContractShapeError: A leg does not exist or dimensions differ.
    """
    ta = np.asarray(a)
    tb = np.asarray(b)
    legs_a = [p[0] for p in pairs]
    legs_b = [p[1] for p in pairs]

    if len(set(legs_a)) != len(legs_a) or len(set(legs_b)) != len(legs_b):
        raise DuplicateLegError(f"Duplicate leg in contraction pairs {list(pairs)}")
    for la, lb in pairs:
        if not (0 <= la < ta.ndim and 0 <= lb < tb.ndim):
            raise ContractShapeError(f"Leg pair ({la}, {lb}) out of range")
        if ta.shape[la] != tb.shape[lb]:
            raise ContractShapeError(
                f"Leg dimensions differ: a[{la}]={ta.shape[la]} vs b[{lb}]={tb.shape[lb]}"
            )

    out = np.tensordot(ta, tb, axes=(legs_a, legs_b))
    if not np.all(np.isfinite(out)):
        raise NumericalCheckError("Non-finite entry produced by contraction")
    return np.asarray(out, dtype=np.complex128)


def dagger(
        a: npt.ArrayLike,
        in_legs: Sequence[int] | None = None,
        out_legs: Sequence[int] | None = None,
) -> ComplexArray:
    """
    Hermitian conjugate: complex-conjugate and swap in/out legs.

    With no legs given, the first half of the legs are taken as outputs.

    Raises:
        LegPartitionError: ``in_legs`` and ``out_legs`` do not partition the legs.
    """
    t = np.asarray(a, dtype=np.complex128)
    if in_legs is None and out_legs is None:
        half = t.ndim // 2
        out_legs, in_legs = list(range(half)), list(range(half, t.ndim))
    assert in_legs is not None and out_legs is not None
    if sorted(list(in_legs) + list(out_legs)) != list(range(t.ndim)):
        raise LegPartitionError(
            f"Legs in={list(in_legs)} out={list(out_legs)} do not partition {t.ndim} legs"
        )
    return np.conj(t).transpose(list(in_legs) + list(out_legs))


def apply_operator(tensor: npt.ArrayLike, op: npt.ArrayLike, legs: Sequence[int]) -> ComplexArray:
    """
    Apply an m-site operator (shape ``(2,)*2m``) to the given legs of a tensor.

    The new legs take the place of the old ones.
    """
    t = np.asarray(tensor)
    o = np.asarray(op)
    m = len(legs)
    if o.ndim != 2 * m:
        raise ContractShapeError(f"Operator with {o.ndim} legs cannot act on {m} legs")
    res = np.tensordot(o, t, axes=(list(range(m, 2 * m)), list(legs)))
    return np.moveaxis(res, list(range(m)), list(legs))


def conjugate_state(rho: npt.ArrayLike, gate: npt.ArrayLike, positions: Sequence[int]) -> ComplexArray:
    """Schrodinger update ``G rho G^dagger`` of a k-site operator on the given sites."""
    r = np.asarray(rho)
    k = r.ndim // 2
    g = np.asarray(gate)
    out = apply_operator(r, g, list(positions))
    return apply_operator(out, np.conj(g), [k + p for p in positions])


def conjugate_observable(op: npt.ArrayLike, gate: npt.ArrayLike, positions: Sequence[int]) -> ComplexArray:
    """Heisenberg update ``G^dagger O G`` of a k-site operator on the given sites."""
    return conjugate_state(op, dagger(gate), positions)


# -----------------------------------------------------------------------------
# SHAPES AND EMBEDDINGS
# -----------------------------------------------------------------------------

def operator_matrix(tensor: npt.ArrayLike) -> ComplexArray:
    t = np.asarray(tensor)
    dim = int(round(math.sqrt(t.size)))
    return t.reshape(dim, dim)


def operator_tensor(matrix: npt.ArrayLike) -> ComplexArray:
    m = np.asarray(matrix)
    k = int(round(math.log2(m.shape[0])))
    return m.reshape((2,) * (2 * k))


def embed_operator(op: npt.ArrayLike, n_window: int, offset: int) -> ComplexArray:
    """
    Embed an m-site operator into an ``n_window``-site window at ``offset``.

    Returns:
        ComplexArray: Matrix of size ``2**n_window``.
    """
    mat = operator_matrix(op) if np.asarray(op).ndim != 2 else np.asarray(op)
    m = int(round(math.log2(mat.shape[0])))
    if offset < 0 or offset + m > n_window:
        raise SiteIndexError(f"Cannot embed {m} sites at offset {offset} in a {n_window}-site window")
    left = np.eye(2 ** offset)
    right = np.eye(2 ** (n_window - offset - m))
    return np.kron(np.kron(left, mat), right).astype(np.complex128)


def is_hermitian(op: npt.ArrayLike, tol: float = HERMITIAN_TOL) -> bool:
    mat = operator_matrix(op) if np.asarray(op).ndim != 2 else np.asarray(op)
    scale = max(1.0, float(np.linalg.norm(mat)))
    return float(np.linalg.norm(mat - mat.conj().T)) <= tol * scale


def hermitian_part(op: npt.ArrayLike) -> ComplexArray:
    """
    Return a Hermitian representative of an operator known up to a phase.

    Eigenvectors of Hermiticity-preserving maps come out with an arbitrary
    phase; the larger of the Hermitian and anti-Hermitian parts is kept.
    """
    mat = np.asarray(op)
    herm = 0.5 * (mat + mat.conj().T)
    anti = -0.5j * (mat - mat.conj().T)
    return herm if np.linalg.norm(herm) >= np.linalg.norm(anti) else anti


def popcount(indices: npt.NDArray[np.int64], n_bits: int) -> npt.NDArray[np.int64]:
    count = np.zeros_like(indices)
    for b in range(n_bits):
        count += (indices >> b) & 1
    return count


# -----------------------------------------------------------------------------
# BOUNDARY STATE VECTORS
# -----------------------------------------------------------------------------

def to_little_endian(state: npt.ArrayLike) -> ComplexArray:
    """Flatten a ``(2,)*N`` state tensor so that bit s of the index is site s."""
    t = np.asarray(state)
    return t.transpose(tuple(reversed(range(t.ndim)))).reshape(-1)


def from_little_endian(vector: npt.ArrayLike, n_sites: int) -> ComplexArray:
    v = np.asarray(vector)
    return v.reshape((2,) * n_sites).transpose(tuple(reversed(range(n_sites))))


def local_operator_sparse(
        op: npt.ArrayLike,
        sites: Iterable[int],
        n_sites: int,
) -> sp.csr_matrix:
    """
    Lift a local operator to the full little-endian Hilbert space.

    Args:
        op: Local operator, tensor or matrix form, legs in the order of ``sites``.
        sites: Sites the legs act on.
        n_sites: Chain length.

    Returns:
        sp.csr_matrix: ``2**n_sites`` square sparse matrix.
    """
    site_list = list(sites)
    k = len(site_list)
    mat = np.asarray(op).reshape(2 ** k, 2 ** k)
    if any(not (0 <= s < n_sites) for s in site_list):
        raise SiteIndexError(f"Sites {site_list} out of range for N={n_sites}")

    dim = 2 ** n_sites
    idx = np.arange(dim, dtype=np.int64)
    local_in = np.zeros(dim, dtype=np.int64)
    clear_mask = 0
    for q, s in enumerate(site_list):
        local_in |= ((idx >> s) & 1) << (k - 1 - q)
        clear_mask |= 1 << s
    base = idx & ~clear_mask

    rows, cols, vals = [], [], []
    for b in range(2 ** k):
        col_vals = mat[b, local_in]
        nz = col_vals != 0
        if not np.any(nz):
            continue
        out_bits = 0
        for q, s in enumerate(site_list):
            out_bits |= ((b >> (k - 1 - q)) & 1) << s
        rows.append((base | out_bits)[nz])
        cols.append(idx[nz])
        vals.append(col_vals[nz])

    if not rows:
        return sp.csr_matrix((dim, dim), dtype=np.complex128)
    return sp.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(dim, dim),
        dtype=np.complex128,
    )


def phase_aligned_distance(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """Distance between two states after removing the relative global phase."""
    va = np.asarray(a).reshape(-1)
    vb = np.asarray(b).reshape(-1)
    overlap = np.vdot(vb, va)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.linalg.norm(va - phase * vb))
