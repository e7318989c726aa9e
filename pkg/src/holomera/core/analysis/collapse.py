from __future__ import annotations

"""
Collapse Quality.

Quantifies how well a family of curves falls onto a single master curve
once each curve has been divided by its normalizer (for the hologron
potential, the boost factor ``min(E1, E2)``).
"""

import logging
from typing import Dict, Mapping, Sequence, Tuple

import numpy as np

from holomera.domain.errors import AlignmentError

logger = logging.getLogger(__name__)

Curve = Mapping[float, float]


def curve_from_pairs(pairs: Sequence[Tuple[float, float]]) -> Dict[float, float]:
    """Build a ``{grid point: value}`` curve, averaging repeated grid points."""
    acc: Dict[float, list] = {}
    for x, y in pairs:
        acc.setdefault(float(x), []).append(float(y))
    return {x: float(np.mean(ys)) for x, ys in acc.items()}


def family_spread(curves: Sequence[Curve]) -> float:
    """
    RMS spread across a family of curves.

    At every grid point shared by at least two curves the values are
    compared to their mean; the spread is the RMS of those deviations over
    all such points.

    Raises:
        AlignmentError: Fewer than two curves or no shared grid point.
    """
    if len(curves) < 2:
        raise AlignmentError(f"Collapse needs at least two curves, got {len(curves)}")

    grid = sorted({x for c in curves for x in c})
    deviations = []
    for x in grid:
        values = np.array([c[x] for c in curves if x in c])
        if values.size >= 2:
            deviations.append(values - values.mean())
    if not deviations:
        raise AlignmentError("Curves share no grid point")
    return float(np.sqrt(np.mean(np.concatenate(deviations) ** 2)))


def collapse_quality(raw: Sequence[Curve], normalized: Sequence[Curve]) -> float:
    """
    Scale-free spread of the normalized family relative to the raw family.

    Args:
        raw: Curves before normalization.
        normalized: The same curves after division by their normalizers.

    Returns:
        float: Ratio in ``[0, 1]``; 0 for a perfect collapse, 1 when
        normalization does not reduce the spread.

    Raises:
        AlignmentError: Families of different sizes or without a shared grid.
    """
    if len(raw) != len(normalized):
        raise AlignmentError(f"Raw ({len(raw)}) and normalized ({len(normalized)}) families differ in size")
    for r, n in zip(raw, normalized):
        if set(r) != set(n):
            raise AlignmentError("Normalized curve is defined on a different grid than its raw curve")

    raw_spread = relative_spread(raw)
    norm_spread = relative_spread(normalized)
    if raw_spread == 0.0:
        return 0.0 if norm_spread == 0.0 else 1.0
    quality = float(np.clip(norm_spread / raw_spread, 0.0, 1.0))
    logger.info(f"Collapse quality {quality:.4f} (raw relative spread {raw_spread:.3e}, normalized {norm_spread:.3e})")
    return quality


def relative_spread(curves: Sequence[Curve]) -> float:
    """Spread normalized by the RMS value of the family (scale-free)."""
    spread = family_spread(curves)
    scale = float(np.sqrt(np.mean([v ** 2 for c in curves for v in c.values()])))
    return spread / scale if scale > 0.0 else 0.0
