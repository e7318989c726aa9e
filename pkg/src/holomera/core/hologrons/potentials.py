from __future__ import annotations

"""
Two-Hologron Potentials.

Radial pairs sit on one radial lineage (the data output of ``(rho, s)``
feeds ``(rho+1, 2s)``); angular pairs share a radius at arclength
separation ``delta_s``. Curves are collapsed by ``b = min(E_1h(x1), E_1h(x2))``.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from holomera.core.hologrons.energetics import pair_interaction, single_energies
from holomera.core.network.mera import BulkCoordinate, MeraNetwork
from holomera.core.parallel import parallel_map
from holomera.domain.errors import ConfigError

logger = logging.getLogger(__name__)

RADIAL = "radial"
ANGULAR = "angular"


@dataclass(frozen=True)
class PotentialPoint:
    """
    One hologron pair.

    Attributes:
        x1: First insertion.
        x2: Second insertion.
        e1: ``E_1h(x1)``.
        e2: ``E_1h(x2)``.
        interaction: ``V = E_2h - E_1h(x1) - E_1h(x2)``.
    """
    x1: BulkCoordinate
    x2: BulkCoordinate
    e1: float
    e2: float
    interaction: float

    @property
    def pair_energy(self) -> float:
        return self.interaction + self.e1 + self.e2

    @property
    def boost(self) -> float:
        return min(self.e1, self.e2)

    @property
    def collapsed(self) -> float:
        return self.interaction / self.boost

    @property
    def radial_separation(self) -> int:
        return abs(self.x1.rho - self.x2.rho)

    def swapped(self) -> "PotentialPoint":
        return PotentialPoint(self.x2, self.x1, self.e2, self.e1, self.interaction)


@dataclass(frozen=True)
class PotentialCurve:
    """
    Interaction potential over a family of hologron pairs.

    Attributes:
        mode: ``radial`` or ``angular``.
        n_sites: Boundary size of the network.
        points: Pairs in sweep order.
        gauge_id: Index of the hologron gauge (0 for the canonical gauge).
        noise_tag: Noise model label, empty for ideal networks.
    """
    mode: str
    n_sites: int
    points: Tuple[PotentialPoint, ...]
    gauge_id: int = 0
    noise_tag: str = ""
    meta: Dict[str, Any] = field(default_factory=dict)

    def separations(self) -> np.ndarray:
        if self.mode == RADIAL:
            return np.array([p.radial_separation for p in self.points], dtype=float)
        return np.array([_arclength(p) for p in self.points], dtype=float)

    def interactions(self) -> np.ndarray:
        return np.array([p.interaction for p in self.points])

    def collapsed(self) -> np.ndarray:
        return np.array([p.collapsed for p in self.points])

    def rows(self) -> List[Dict[str, Any]]:
        """CSV records: ``N, gauge_id, noise, rho1, s1, rho2, s2, sep, E1, E2, E2h, V, V_collapsed``."""
        return [
            {
                "N": self.n_sites,
                "gauge_id": self.gauge_id,
                "noise": self.noise_tag,
                "rho1": p.x1.rho,
                "s1": p.x1.s,
                "rho2": p.x2.rho,
                "s2": p.x2.s,
                "separation": sep,
                "E1": p.e1,
                "E2": p.e2,
                "E2h": p.pair_energy,
                "V": p.interaction,
                "V_collapsed": p.collapsed,
            }
            for p, sep in zip(self.points, self.separations().tolist())
        ]


# -----------------------------------------------------------------------------
# SWEEPS
# -----------------------------------------------------------------------------

def radial_pairs(
        depth: int,
        rho_range: Tuple[int, int],
        s0: int = 0,
) -> List[Tuple[BulkCoordinate, BulkCoordinate]]:
    """Ordered pairs ``rho1 < rho2`` on the lineage through ``(rho_range[0], s0)``."""
    lo, hi = rho_range
    if not (2 <= lo <= hi <= depth - 1):
        raise ConfigError(f"Radial range [{lo}, {hi}] outside [2, {depth - 1}]")
    base = BulkCoordinate(lo, s0).validate(depth)
    line = [base.child(r - lo) for r in range(lo, hi + 1)]
    return [(line[i], line[j]) for i in range(len(line)) for j in range(i + 1, len(line))]


def radial_potential(
        net: MeraNetwork,
        rho_range: Tuple[int, int],
        s0: int = 0,
        *,
        both_orders: bool = True,
        threads: int = 1,
        gauge_id: int = 0,
        noise_tag: str = "",
) -> PotentialCurve:
    """
    Radial interaction potential over all pairs of a lineage.

    Args:
        net: Network.
        rho_range: Inclusive radial range.
        s0: Angular index at the innermost radius.
        both_orders: Emit ``(x2, x1)`` next to every ``(x1, x2)``.
        threads: Worker count for the pair sweep.
        gauge_id: Label stored on the curve.
        noise_tag: Label stored on the curve.
    """
    pairs = radial_pairs(net.depth, rho_range, s0)
    points = _sweep(net, pairs, threads)
    if both_orders:
        points = [q for p in points for q in (p, p.swapped())]
    logger.info(f"Radial potential D={net.depth}: {len(pairs)} pairs in [{rho_range[0]}, {rho_range[1]}]")
    return PotentialCurve(RADIAL, net.n_sites, tuple(points), gauge_id, noise_tag)


def angular_potential(
        net: MeraNetwork,
        rhos: Sequence[int],
        delta_s: int = 1,
        s0: int = 0,
        *,
        threads: int = 1,
        gauge_id: int = 0,
        noise_tag: str = "",
) -> PotentialCurve:
    """
    Angular interaction potential at arclength separation ``delta_s`` for each radius.

    Pairs further apart than two isometries have disjoint boundary cones,
    so their potential is exactly zero.
    """
    if delta_s < 1:
        raise ConfigError(f"Angular separation must be >= 1, got {delta_s}")
    pairs: List[Tuple[BulkCoordinate, BulkCoordinate]] = []
    for rho in rhos:
        n_c = 2 ** rho
        if delta_s >= n_c:
            raise ConfigError(f"Separation {delta_s} does not fit {n_c} sites at rho={rho}")
        x1 = BulkCoordinate(rho, s0 % n_c).validate(net.depth)
        pairs.append((x1, BulkCoordinate(rho, (s0 + delta_s) % n_c)))
    points = _sweep(net, pairs, threads)
    logger.info(f"Angular potential D={net.depth}: delta_s={delta_s} over {len(pairs)} radii")
    return PotentialCurve(ANGULAR, net.n_sites, tuple(points), gauge_id, noise_tag, {"delta_s": delta_s})


# -----------------------------------------------------------------------------
# COLLAPSE
# -----------------------------------------------------------------------------

def collapse(curve: PotentialCurve) -> List[Tuple[float, float]]:
    """
    Collapsed potential ``V / b`` averaged per separation.

    Returns:
        List[Tuple[float, float]]: ``(separation, mean collapsed value)`` sorted by separation.
    """
    groups: Dict[float, List[float]] = {}
    for sep, value in zip(curve.separations().tolist(), curve.collapsed().tolist()):
        groups.setdefault(sep, []).append(value)
    return [(sep, math.fsum(vals) / len(vals)) for sep, vals in sorted(groups.items())]


def collapse_family(curve: PotentialCurve) -> Tuple[List[Dict[float, float]], List[Dict[float, float]]]:
    """
    Split a curve into the family compared by the collapse metric.

    Radial curves give one member per position of the first hologron, on the
    grid of signed separations ``rho2 - rho1``. Angular curves give one
    member per radius on the arclength grid.

    Returns:
        Tuple: Raw ``V`` members and the same members divided by the boost.
    """
    raw: Dict[Tuple[int, int], Dict[float, float]] = {}
    normalized: Dict[Tuple[int, int], Dict[float, float]] = {}
    for p in curve.points:
        key = (p.x1.rho, p.x1.s)
        grid = float(p.x2.rho - p.x1.rho) if curve.mode == RADIAL else float(_arclength(p))
        raw.setdefault(key, {})[grid] = p.interaction
        normalized.setdefault(key, {})[grid] = p.collapsed
    keys = sorted(raw)
    return [raw[k] for k in keys], [normalized[k] for k in keys]


def is_monotone(values: Sequence[float], tol: float = 1e-12) -> bool:
    """True if the sequence is non-decreasing or non-increasing."""
    diffs = np.diff(np.asarray(values, dtype=float))
    return bool(np.all(diffs >= -tol) or np.all(diffs <= tol))


# -----------------------------------------------------------------------------
# PRIVATE HELPERS
# -----------------------------------------------------------------------------

def _sweep(
        net: MeraNetwork,
        pairs: Sequence[Tuple[BulkCoordinate, BulkCoordinate]],
        threads: int,
) -> List[PotentialPoint]:
    coords = [x for pair in pairs for x in pair]
    singles = single_energies(net, coords, threads)
    interactions = parallel_map(
        lambda pair: pair_interaction(net, pair[0], pair[1]), pairs, threads=threads, label="Hologron2"
    )
    return [
        PotentialPoint(x1, x2, singles[x1], singles[x2], v)
        for (x1, x2), v in zip(pairs, interactions)
    ]


def _arclength(p: PotentialPoint) -> int:
    n_c = 2 ** p.x1.rho
    d = abs(p.x1.s - p.x2.s) % n_c
    return min(d, n_c - d)
