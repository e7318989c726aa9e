from __future__ import annotations

"""
Random Hologron Gauge Study.

Collapsed radial potentials for an ensemble of random hologron gauges.
The ground state is gauge invariant, so every member shares the core of the
canonical network.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from holomera.core.hologrons.potentials import PotentialCurve, collapse, is_monotone, radial_potential
from holomera.core.network.gauge import random_gauge
from holomera.core.network.mera import MeraNetwork
from holomera.domain.errors import ConfigError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaugeSweep:
    """
    Result of a random-gauge ensemble.

    Attributes:
        curves: Radial curve per gauge (``gauge_id`` 1..n).
        collapsed: Collapsed ``(separation, value)`` series per gauge.
        averaged: Gauge-averaged collapsed series.
        non_monotone: Number of gauges whose collapsed series is not monotone.
    """
    curves: Tuple[PotentialCurve, ...]
    collapsed: Tuple[Tuple[Tuple[float, float], ...], ...]
    averaged: Tuple[Tuple[float, float], ...]
    non_monotone: int

    @property
    def n_gauges(self) -> int:
        return len(self.curves)


def gauge_sweep(
        net: MeraNetwork,
        n_gauges: int,
        seed: int,
        rho_range: Tuple[int, int],
        s0: int = 0,
        threads: int = 1,
) -> GaugeSweep:
    """
    Radial potentials for ``n_gauges`` random gauges.

    Gauge ``g`` is drawn from the stream ``default_rng([seed, g])`` so that
    each member is independent of the ensemble size.

    Args:
        net: Network in the canonical gauge.
        n_gauges: Ensemble size.
        seed: Master seed.
        rho_range: Inclusive radial range.
        s0: Angular index at the innermost radius.
        threads: Worker count for each pair sweep.
    """
    if n_gauges < 1:
        raise ConfigError(f"Gauge ensemble needs at least one member, got {n_gauges}")
    curves: List[PotentialCurve] = []
    collapsed: List[Tuple[Tuple[float, float], ...]] = []
    for g in range(1, n_gauges + 1):
        gauge = random_gauge(np.random.default_rng([seed, g]))
        curve = radial_potential(
            net.with_gauge(gauge), rho_range, s0, both_orders=False, threads=threads, gauge_id=g
        )
        curves.append(curve)
        collapsed.append(tuple(collapse(curve)))

    non_monotone = sum(not is_monotone([v for _, v in series]) for series in collapsed)
    seps = [s for s, _ in collapsed[0]]
    averaged = tuple(
        (sep, float(np.mean([series[i][1] for series in collapsed]))) for i, sep in enumerate(seps)
    )
    logger.info(f"Gauge sweep: {n_gauges} gauges, {non_monotone} non-monotone collapsed curves")
    return GaugeSweep(tuple(curves), tuple(collapsed), averaged, non_monotone)
