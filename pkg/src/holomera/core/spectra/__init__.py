from __future__ import annotations

from .cache import SpectrumCache
from .coefficients import (
    CoefficientEntry,
    CoefficientTable,
    DimensionCoefficient,
    analytic_potential,
    coefficient_table,
    collapsed_analytic_potential,
    labeled_summary,
)
from .decomposition import (
    DimensionGroup,
    ScalingSpectrum,
    charge_block_residual,
    charge_sectors,
    eigendecompose,
)
from .export import spectrum_rows
from .iteration import ascend_iterated, identity_residual_curve, thermodynamic_energy_density
from .projection import (
    STRESS_LABELS,
    StressOperators,
    conformal_project,
    conjugator_placements,
    extract_stress_and_descendants,
    hologron_conjugator,
    place_conjugator,
)
from .superoperator import VARIANTS, Superoperator, build_superoperator, variant_offsets

__all__ = [
    "CoefficientEntry",
    "CoefficientTable",
    "DimensionCoefficient",
    "DimensionGroup",
    "STRESS_LABELS",
    "ScalingSpectrum",
    "SpectrumCache",
    "StressOperators",
    "Superoperator",
    "VARIANTS",
    "analytic_potential",
    "ascend_iterated",
    "build_superoperator",
    "charge_block_residual",
    "charge_sectors",
    "coefficient_table",
    "collapsed_analytic_potential",
    "conformal_project",
    "conjugator_placements",
    "eigendecompose",
    "extract_stress_and_descendants",
    "hologron_conjugator",
    "identity_residual_curve",
    "labeled_summary",
    "place_conjugator",
    "spectrum_rows",
    "thermodynamic_energy_density",
    "variant_offsets",
]
