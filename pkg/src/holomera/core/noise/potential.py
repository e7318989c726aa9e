from __future__ import annotations

"""
Monte-Carlo Noisy Hologron Potentials.

The mixed-state potential ``Tr[s_2h H] - Tr[s_1h H] - Tr[s_1h' H] + E_GS`` is
estimated by averaging the pure-state potential over independent circuit
realizations. Each realization evaluates the ground, one- and two-hologron
states of the same sampled gates.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from holomera.core.engine.windows import WindowEngine
from holomera.core.network.mera import BulkCoordinate, MeraNetwork, validate_flips
from holomera.core.noise.channels import NoiseModel, gate_fidelity
from holomera.core.noise.sampling import noisy_network
from holomera.core.parallel import parallel_map
from holomera.domain.errors import ConfigError

logger = logging.getLogger(__name__)

Pair = Tuple[BulkCoordinate, BulkCoordinate]


@dataclass(frozen=True)
class NoisyPoint:
    """
    Sample statistics of one hologron pair.

    Attributes:
        x1: First insertion.
        x2: Second insertion.
        v_mean: Mean interaction energy.
        v_stderr: Standard error of the mean.
        e1_mean: Mean single-hologron energy at ``x1``.
        e2_mean: Mean single-hologron energy at ``x2``.
    """
    x1: BulkCoordinate
    x2: BulkCoordinate
    v_mean: float
    v_stderr: float
    e1_mean: float
    e2_mean: float

    @property
    def collapsed(self) -> float:
        """Mean potential divided by the sample-averaged boost ``min(E1, E2)``."""
        return self.v_mean / min(self.e1_mean, self.e2_mean)


@dataclass(frozen=True)
class NoisyPotential:
    """Noisy potential curve with error bars."""
    noise: NoiseModel
    fidelity: float
    n_samples: int
    points: Tuple[NoisyPoint, ...]

    def rows(self) -> List[Dict[str, Any]]:
        """CSV records: ``eps, F_estimate, rho1, s1, rho2, s2, V_mean, V_stderr, ...``."""
        return [
            {
                "kind": self.noise.kind,
                "eps": self.noise.eps,
                "F_estimate": self.fidelity,
                "rho1": p.x1.rho,
                "s1": p.x1.s,
                "rho2": p.x2.rho,
                "s2": p.x2.s,
                "V_mean": p.v_mean,
                "V_stderr": p.v_stderr,
                "E1_mean": p.e1_mean,
                "E2_mean": p.e2_mean,
                "V_collapsed": p.collapsed,
                "n_samples": self.n_samples,
                "seed": self.noise.seed,
            }
            for p in self.points
        ]

    def family(self) -> Tuple[List[Dict[float, float]], List[Dict[float, float]]]:
        """
        Members compared by the collapse metric, one per insertion point.

        Each pair contributes to the member of both of its hologrons, on the
        grid of signed radial separations.
        """
        raw: Dict[BulkCoordinate, Dict[float, float]] = {}
        normalized: Dict[BulkCoordinate, Dict[float, float]] = {}
        for p in self.points:
            for a, b in ((p.x1, p.x2), (p.x2, p.x1)):
                raw.setdefault(a, {})[float(b.rho - a.rho)] = p.v_mean
                normalized.setdefault(a, {})[float(b.rho - a.rho)] = p.collapsed
        keys = sorted(raw)
        return [raw[k] for k in keys], [normalized[k] for k in keys]


def sample_pair_energies(
        net: MeraNetwork,
        noise: NoiseModel,
        pairs: Sequence[Pair],
        sample_index: int,
) -> np.ndarray:
    """
    Energies of one realization.

    Returns:
        np.ndarray: ``(len(pairs), 3)`` array of ``(V, E_1h(x1), E_1h(x2))``.
    """
    engine = WindowEngine(noisy_network(net, noise, sample_index))
    singles: Dict[BulkCoordinate, float] = {}
    out = np.empty((len(pairs), 3))
    for i, (x1, x2) in enumerate(pairs):
        for x in (x1, x2):
            if x not in singles:
                singles[x] = engine.excitation_energy((x,))
        out[i] = (engine.interaction_energy(x1, x2), singles[x1], singles[x2])
    return out


def noisy_potential(
        net: MeraNetwork,
        noise: NoiseModel,
        pairs: Sequence[Pair],
        n_samples: int,
        *,
        threads: int = 1,
        fidelity_samples: int = 10000,
) -> NoisyPotential:
    """
    Monte-Carlo estimate of the noisy two-hologron potential.

    Args:
        net: Ideal network (its core is reused by every realization).
        noise: Noise model; ``eps = 0`` evaluates the ideal network once.
        pairs: Hologron pairs.
        n_samples: Number of circuit realizations.
        threads: Worker count over realizations.
        fidelity_samples: Monte-Carlo size for the control-error fidelity.

    Raises:
        ConfigError: ``n_samples < 1`` or no pairs.
    """
    if n_samples < 1:
        raise ConfigError(f"n_samples must be >= 1, got {n_samples}")
    if not pairs:
        raise ConfigError("No hologron pairs requested")
    for x1, x2 in pairs:
        validate_flips((x1, x2), net.depth)

    if noise.is_ideal:
        stacked = sample_pair_energies(net, noise, pairs, 0)[None, ...]
        fidelity = 1.0
    else:
        samples = parallel_map(
            lambda i: sample_pair_energies(net, noise, pairs, i),
            list(range(n_samples)),
            threads=threads,
            label="NoiseSample",
        )
        stacked = np.stack(samples)
        fidelity = gate_fidelity(noise, fidelity_samples)

    means = stacked.mean(axis=0)
    n = stacked.shape[0]
    errs = stacked[..., 0].std(axis=0, ddof=1) / math.sqrt(n) if n > 1 else np.zeros(len(pairs))
    points = tuple(
        NoisyPoint(x1, x2, float(means[i, 0]), float(errs[i]), float(means[i, 1]), float(means[i, 2]))
        for i, (x1, x2) in enumerate(pairs)
    )
    logger.info(f"Noisy potential ({noise.tag}): {len(pairs)} pairs x {n} samples, F={fidelity:.5f}")
    return NoisyPotential(noise=noise, fidelity=fidelity, n_samples=n, points=points)
