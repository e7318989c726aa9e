from __future__ import annotations

from .operations import (
    LocalOperator,
    apply_operator,
    conjugate_observable,
    conjugate_state,
    contract,
    dagger,
    embed_operator,
    from_little_endian,
    hermitian_part,
    is_hermitian,
    local_operator_sparse,
    operator_matrix,
    operator_tensor,
    phase_aligned_distance,
    popcount,
    to_little_endian,
)

__all__ = [
    "LocalOperator",
    "apply_operator",
    "conjugate_observable",
    "conjugate_state",
    "contract",
    "dagger",
    "embed_operator",
    "from_little_endian",
    "hermitian_part",
    "is_hermitian",
    "local_operator_sparse",
    "operator_matrix",
    "operator_tensor",
    "phase_aligned_distance",
    "popcount",
    "to_little_endian",
]
