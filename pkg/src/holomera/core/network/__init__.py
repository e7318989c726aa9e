from __future__ import annotations

from .gates import GateSet, analytic_gates, check_flip_relation, two_site_pauli
from .gauge import CANONICAL_GAUGE, HologronGauge, gauge_matrix, gauge_transform, random_gauge
from .geometry import ConeSlice, boundary_cone, cone_overlap, cone_width, lightcone
from .mera import BulkCoordinate, LayerGates, MeraNetwork, assemble_network, validate_flips

__all__ = [
    "CANONICAL_GAUGE",
    "BulkCoordinate",
    "ConeSlice",
    "GateSet",
    "HologronGauge",
    "LayerGates",
    "MeraNetwork",
    "analytic_gates",
    "assemble_network",
    "boundary_cone",
    "check_flip_relation",
    "cone_overlap",
    "cone_width",
    "gauge_matrix",
    "gauge_transform",
    "lightcone",
    "random_gauge",
    "two_site_pauli",
    "validate_flips",
]
