from __future__ import annotations

"""
Wavelet MERA Network Model.

A depth-D network has a 4-qubit core (the top of the bulk) and ``D-2``
layers. Layer ``l`` (``2 <= l <= D-1``) maps ``n_c = 2**l`` coarse sites to
``2 n_c`` fine sites: isometry ``j`` feeds fine sites ``(2j, 2j+1)``, then
disentangler ``p`` acts on the fine pair ``(2p+1, 2p+2 mod 2 n_c)``. The
boundary holds ``N = 2**D`` sites. A bulk coordinate ``(rho, s)`` names the
ancilla of isometry ``s`` in layer ``rho``.
"""

from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from holomera.core.network.gates import GateSet, analytic_gates
from holomera.core.network.gauge import CANONICAL_GAUGE, HologronGauge, gauge_transform
from holomera.domain import constants as const
from holomera.domain.errors import (
    CapacityError,
    ConfigError,
    DuplicateInsertionError,
    SiteIndexError,
)


# -----------------------------------------------------------------------------
# COORDINATES
# -----------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class BulkCoordinate:
    """
    Bulk site of a hologron insertion.

    Attributes:
        rho: Layer index, ``2 <= rho <= D-1`` (larger is closer to the boundary).
        s: Isometry index within the layer, ``0 <= s < 2**rho``.
    """
    rho: int
    s: int

    def validate(self, depth: int) -> "BulkCoordinate":
        if not (2 <= self.rho <= depth - 1):
            raise SiteIndexError(f"Radial index {self.rho} outside [2, {depth - 1}]")
        if not (0 <= self.s < 2 ** self.rho):
            raise SiteIndexError(f"Angular index {self.s} outside [0, {2 ** self.rho}) at rho={self.rho}")
        return self

    def rho_hat(self, depth: int) -> int:
        """Depth measured from the boundary, ``D - rho``."""
        return depth - self.rho

    def child(self, steps: int = 1) -> "BulkCoordinate":
        """Coordinate on the same radial lineage ``steps`` layers closer to the boundary."""
        return BulkCoordinate(self.rho + steps, self.s * 2 ** steps)


def validate_flips(flips: Iterable[BulkCoordinate], depth: int) -> Tuple[BulkCoordinate, ...]:
    """
    Validate a set of insertions.

    Raises:
        SiteIndexError: A coordinate is outside the network.
        DuplicateInsertionError: Two insertions share a coordinate.
    """
    out = tuple(f.validate(depth) for f in flips)
    if len(set(out)) != len(out):
        raise DuplicateInsertionError(f"Duplicate hologron insertion in {out}")
    return out


def flips_by_layer(flips: Iterable[BulkCoordinate]) -> Dict[int, frozenset]:
    grouped: Dict[int, set] = {}
    for f in flips:
        grouped.setdefault(f.rho, set()).add(f.s)
    return {rho: frozenset(ss) for rho, ss in grouped.items()}


# -----------------------------------------------------------------------------
# NETWORK
# -----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LayerGates:
    """
    Per-position gates of one layer.

    Attributes:
        w: Isometry unitaries, shape ``(n_c, 2, 2, 2, 2)``.
        u: Disentanglers, shape ``(n_c, 2, 2, 2, 2)``; entry ``p`` acts on
            fine sites ``(2p+1, 2p+2)``.
    """
    w: npt.NDArray[np.complex128]
    u: npt.NDArray[np.complex128]

    @property
    def n_coarse(self) -> int:
        return int(self.w.shape[0])

    def isometries(self, flipped: Sequence[int] = ()) -> npt.NDArray[np.complex128]:
        """Per-position isometries ``(n_c, 2, 2, 2)`` with the listed ancillas flipped."""
        anc = np.zeros(self.n_coarse, dtype=np.int64)
        if len(flipped):
            anc[np.asarray(list(flipped), dtype=np.int64)] = 1
        return self.w[np.arange(self.n_coarse), :, :, :, anc]


@dataclass(frozen=True, eq=False)
class MeraNetwork:
    """
    Complete wavelet MERA.

    Attributes:
        depth: Number of scales D; the boundary has ``2**D`` sites.
        gates: Homogeneous gates (after the hologron gauge).
        core: Normalized 4-qubit top state, shape ``(2, 2, 2, 2)``.
        gauge: Hologron gauge applied to ``gates``.
        overrides: Optional per-layer gate arrays replacing the homogeneous
            gates (used by noisy realizations).
    """
    depth: int
    gates: GateSet
    core: npt.NDArray[np.complex128]
    gauge: HologronGauge = CANONICAL_GAUGE
    overrides: Mapping[int, LayerGates] = field(default_factory=dict)

    @property
    def n_sites(self) -> int:
        return 2 ** self.depth

    @property
    def layers(self) -> List[int]:
        """Layer indices from the core outwards, ``2 .. D-1``."""
        return list(range(2, self.depth))

    def layer(self, rho: int) -> LayerGates:
        if rho in self.overrides:
            return self.overrides[rho]
        n_c = 2 ** rho
        return LayerGates(
            w=np.broadcast_to(self.gates.w, (n_c, 2, 2, 2, 2)),
            u=np.broadcast_to(self.gates.u, (n_c, 2, 2, 2, 2)),
        )

    def with_core(self, core: npt.NDArray[np.complex128]) -> "MeraNetwork":
        return replace(self, core=core)

    def with_gauge(self, gauge: HologronGauge) -> "MeraNetwork":
        """
        Re-gauge the flipped isometry.

        The ground isometry is unchanged, so the core stays optimal and is kept.
        """
        if not self.gauge.is_canonical:
            raise ConfigError("Network is already gauged; re-gauge from the canonical network")
        return replace(self, gates=gauge_transform(self.gates, gauge), gauge=gauge)

    def with_overrides(self, overrides: Mapping[int, LayerGates]) -> "MeraNetwork":
        return replace(self, overrides=dict(overrides))


def check_depth(depth: int) -> None:
    """
    Raises:
        ConfigError: Depth below the minimum.
        CapacityError: Depth above the supported maximum.
    """
    if depth < 2:
        raise ConfigError(f"Depth must be >= 2, got {depth}")
    if depth > const.MAX_DEPTH:
        raise CapacityError(f"Depth {depth} exceeds the supported maximum {const.MAX_DEPTH}")


def uniform_core() -> npt.NDArray[np.complex128]:
    """Placeholder core used before optimization."""
    core = np.zeros((2, 2, 2, 2), dtype=np.complex128)
    core[0, 0, 0, 0] = 1.0
    return core


def assemble_network(
        depth: int,
        gates: Optional[GateSet] = None,
        gauge: HologronGauge = CANONICAL_GAUGE,
        core: Optional[npt.NDArray[np.complex128]] = None,
) -> MeraNetwork:
    """Build a network from gates without optimizing the core."""
    check_depth(depth)
    base = gates if gates is not None else analytic_gates()
    return MeraNetwork(
        depth=depth,
        gates=gauge_transform(base, gauge),
        core=core if core is not None else uniform_core(),
        gauge=gauge,
    )
