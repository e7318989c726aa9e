from __future__ import annotations

"""
Causal Cone Geometry.

Forward light cone of a bulk insertion: the set of sites, at every scale
between the insertion and the boundary, whose reduced state can differ
from the ground state. An interval ``[a, b]`` of coarse sites maps to
``[2a-1, 2b+2]`` after one layer, so a cone started at ``(rho, s)`` covers
``3 * 2**(D-rho) - 2`` boundary sites (capped at N).
"""

from dataclasses import dataclass
from typing import FrozenSet, List

from holomera.core.network.mera import BulkCoordinate


@dataclass(frozen=True)
class ConeSlice:
    """
    Cone section on one scale.

    Attributes:
        level: Scale index; the ring has ``2**level`` sites.
        start: First covered site (mod ring size).
        length: Number of covered sites.
    """
    level: int
    start: int
    length: int

    @property
    def n_sites(self) -> int:
        return 2 ** self.level

    @property
    def is_full(self) -> bool:
        return self.length >= self.n_sites

    def sites(self) -> FrozenSet[int]:
        n = self.n_sites
        return frozenset((self.start + d) % n for d in range(min(self.length, n)))


def lightcone(x: BulkCoordinate, depth: int) -> List[ConeSlice]:
    """
    Forward cone of an insertion from the layer below it to the boundary.

    Args:
        x: Insertion coordinate.
        depth: Network depth D.

    Returns:
        List[ConeSlice]: One slice per scale ``rho+1 .. D``.
    """
    x.validate(depth)
    a, b = 2 * x.s - 1, 2 * x.s + 2
    slices: List[ConeSlice] = []
    for level in range(x.rho + 1, depth + 1):
        if level > x.rho + 1:
            a, b = 2 * a - 1, 2 * b + 2
        n = 2 ** level
        length = min(b - a + 1, n)
        slices.append(ConeSlice(level=level, start=a % n, length=length))
        if length == n:
            a, b = 0, n - 1
    return slices


def boundary_cone(x: BulkCoordinate, depth: int) -> FrozenSet[int]:
    return lightcone(x, depth)[-1].sites()


def cone_width(x: BulkCoordinate, depth: int) -> int:
    """Boundary footprint ``min(3 * 2**rho_hat - 2, N)``."""
    return min(3 * 2 ** x.rho_hat(depth) - 2, 2 ** depth)


def cone_overlap(x1: BulkCoordinate, x2: BulkCoordinate, depth: int) -> int:
    """Number of boundary sites shared by the cones of two insertions."""
    return len(boundary_cone(x1, depth) & boundary_cone(x2, depth))
