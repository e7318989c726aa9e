from __future__ import annotations

"""
Analytic Potential Coefficients.

Coefficients ``C_alpha`` of the operator-product expansion of two
hologrons, built from the labeled spectrum and the hologron conjugator
``X~``. The two-hologron potential predicted by them is
``b(rho1, rho2) * sum_alpha C_alpha exp(-(Delta_alpha - 1) |rho1 - rho2| / ell)``.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from holomera.core.gravity.ads import boost_factor
from holomera.core.network.gates import GateSet
from holomera.core.spectra.decomposition import ScalingSpectrum
from holomera.core.spectra.projection import STRESS_LABELS, StressOperators, conjugator_placements, place_conjugator
from holomera.domain import constants as const
from holomera.domain.errors import LabelingRequiredError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoefficientEntry:
    label: str
    delta: float
    value: float


@dataclass(frozen=True)
class DimensionCoefficient:
    delta: float
    multiplicity: int
    value: float


@dataclass(frozen=True)
class CoefficientTable:
    """
    Coefficients of the analytic two-hologron potential.

    Attributes:
        c_T: Overlap of the energy density with the stress tensor.
        c_Tbar: Same for the antichiral component.
        entries: ``C_alpha`` per Z2-even scaling operator (labels for the
            dimension-2 group, ``op<i>`` for spectrum entries otherwise).
        grouped: ``C_Delta`` summed over each dimension group.
        mass_energy_half: Analytic single-hologron energy ``mc^2 / 2``.
        conjugator_offset: Window site of the conjugator, ``None`` when
            averaged over all placements.
    """
    c_T: float
    c_Tbar: float
    entries: List[CoefficientEntry]
    grouped: List[DimensionCoefficient]
    mass_energy_half: float
    conjugator_offset: Optional[int] = None

    def value(self, label: str) -> float:
        for entry in self.entries:
            if entry.label == label:
                return entry.value
        raise KeyError(label)

    def grouped_value(self, delta: float, tol: float = const.DELTA_GROUP_TOL) -> float:
        for group in self.grouped:
            if abs(group.delta - delta) < tol:
                return group.value
        raise KeyError(delta)


def coefficient_table(
        spectrum: ScalingSpectrum,
        stress: Optional[StressOperators],
        gates: Optional[GateSet] = None,
        conjugator_offset: Optional[int] = const.CONJUGATOR_OFFSET,
) -> CoefficientTable:
    """
    Compute ``C_alpha`` and ``C_Delta``.

    ``C_alpha = (c/pi) [<X~ phi_{T+Tbar} X~>_alpha - delta_{alpha T} - delta_{alpha Tbar}]
    * tr(phi_1^L X~ phi_alpha^R X~)``, with ``X~`` on a fixed window position.

    Args:
        spectrum: Spectrum the stress operators were labeled in.
        stress: Output of ``extract_stress_and_descendants``.
        gates: Gates defining the conjugator.
        conjugator_offset: First window site of ``X~``. The default puts it
            one site left of the energy density the trials are built on.
            ``None`` averages the conjugation over every placement.

    Raises:
        LabelingRequiredError: If ``stress`` is missing.
        ConfigError: The offset does not fit the window.
    """
    if stress is None:
        raise LabelingRequiredError("Dimension-2 operators must be labeled before computing C_alpha")

    if conjugator_offset is None:
        placements = conjugator_placements(spectrum.k, gates)
    else:
        placements = [place_conjugator(spectrum.k, conjugator_offset, gates)]

    def conj(op: np.ndarray) -> np.ndarray:
        return sum(x @ op @ x for x in placements) / len(placements)

    c = stress.c
    ident = spectrum.identity_index()
    left_id = spectrum.left[ident]
    phi_tt = conj(stress.right["T"] + stress.right["Tbar"])

    def c_alpha(label: str, left: np.ndarray, right: np.ndarray) -> float:
        first = complex(np.trace(left @ phi_tt))
        if label in ("T", "Tbar"):
            first -= 1.0
        second = complex(np.trace(left_id @ conj(right)))
        return float((c / math.pi * first * second).real)

    group2 = set(stress.group_indices)
    entries: List[CoefficientEntry] = []
    for i in range(spectrum.size):
        if i == ident or i in group2 or spectrum.charges[i] != 1:
            continue
        entries.append(
            CoefficientEntry(f"op{i}", float(spectrum.deltas[i]), c_alpha("", spectrum.left[i], spectrum.right[i]))
        )
    for label in stress.right:
        entries.append(
            CoefficientEntry(label, stress.group_delta, c_alpha(label, stress.left[label], stress.right[label]))
        )

    grouped = _group_entries(entries)
    mass_half = float((c / math.pi * np.trace(left_id @ phi_tt)).real)
    table = CoefficientTable(
        c_T=stress.c_T,
        c_Tbar=stress.c_Tbar,
        entries=sorted(entries, key=lambda e: (e.delta, e.label)),
        grouped=grouped,
        mass_energy_half=mass_half,
        conjugator_offset=conjugator_offset,
    )
    logger.info(
        "Coefficients: "
        + ", ".join(f"C_{lab}={table.value(lab):.5f}" for lab in STRESS_LABELS)
        + f", mc^2/2={mass_half:.5f}"
    )
    return table


def _group_entries(
        entries: Sequence[CoefficientEntry], tol: float = const.DELTA_GROUP_TOL
) -> List[DimensionCoefficient]:
    ordered = sorted(entries, key=lambda e: e.delta)
    groups: List[List[CoefficientEntry]] = []
    for entry in ordered:
        if groups and entry.delta - groups[-1][-1].delta < tol:
            groups[-1].append(entry)
        else:
            groups.append([entry])
    return [
        DimensionCoefficient(
            delta=float(np.mean([e.delta for e in g])),
            multiplicity=len(g),
            value=math.fsum(e.value for e in g),
        )
        for g in groups
    ]


# -----------------------------------------------------------------------------
# ANALYTIC POTENTIAL
# -----------------------------------------------------------------------------

def collapsed_analytic_potential(
        table: CoefficientTable,
        separation: float,
        ell: float = const.DEFAULT_ELL_ADS,
) -> float:
    """``sum_Delta C_Delta exp(-(Delta - 1) |d| / ell)``."""
    d = abs(separation)
    return math.fsum(g.value * math.exp(-(g.delta - 1.0) * d / ell) for g in table.grouped)


def analytic_potential(
        table: CoefficientTable,
        rho1: float,
        rho2: float,
        ell: float = const.DEFAULT_ELL_ADS,
) -> float:
    """Analytic two-hologron potential with its boost factor ``b(rho1, rho2)``."""
    return boost_factor(rho1, rho2, ell) * collapsed_analytic_potential(table, rho1 - rho2, ell)


def labeled_summary(table: CoefficientTable) -> Dict[str, float]:
    """Flat mapping used by reports and JSON artifacts."""
    out: Dict[str, float] = {"c_T": table.c_T, "c_Tbar": table.c_Tbar}
    for lab in STRESS_LABELS:
        out[f"C_{lab}"] = table.value(lab)
    try:
        out["C_2"] = table.grouped_value(2.0)
    except KeyError:
        pass
    out["mass_energy_half"] = table.mass_energy_half
    return out
