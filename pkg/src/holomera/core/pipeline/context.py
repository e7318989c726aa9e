from __future__ import annotations

"""
Run Context.

Holds the validated configuration of one subcommand run together with its
provenance (config hash, seed) and the artifacts written so far. Networks
are built lazily and shared between the stages of a run.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence

import numpy as np

from holomera.core.network.core_state import build_network
from holomera.core.network.gauge import CANONICAL_GAUGE, HologronGauge, random_gauge
from holomera.core.network.mera import MeraNetwork
from holomera.domain.config import config_hash
from holomera.infra.writers import write_csv, write_json

logger = logging.getLogger(__name__)


@dataclass
class RunContext:
    """
    Mutable state of a single experiment run.

    Attributes:
        cfg: Validated configuration.
        config_hash: Short hash of ``cfg``.
        artifacts: Paths written during the run, in order.
    """
    cfg: Dict[str, Any]
    config_hash: str = ""
    artifacts: List[str] = field(default_factory=list)
    _networks: Dict[str, MeraNetwork] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self.config_hash:
            self.config_hash = config_hash(self.cfg)

    @property
    def seed(self) -> int:
        return int(self.cfg["seed"])

    @property
    def threads(self) -> int:
        return int(self.cfg["threads"])

    # -------------------------------------------------------------------------
    # NETWORKS
    # -------------------------------------------------------------------------

    def gauge(self) -> HologronGauge:
        """Hologron gauge selected by the configuration."""
        mode = self.cfg["gauge"]
        if mode == "random":
            return random_gauge(np.random.default_rng(self.cfg["gauge_seed"]))
        if mode == "explicit":
            theta = self.cfg["gauge_theta"]
            return HologronGauge(theta=(theta[0], theta[1], theta[2]), phi=self.cfg["gauge_phi"])
        return CANONICAL_GAUGE

    def network(self, depth: Optional[int] = None, *, canonical: bool = False) -> MeraNetwork:
        """
        Network of the requested depth with its optimized core.

        Args:
            depth: Defaults to the configured depth.
            canonical: Ignore the configured gauge.
        """
        depth = depth if depth is not None else int(self.cfg["depth"])
        key = f"{depth}:{'canonical' if canonical else self.cfg['gauge']}"
        if key not in self._networks:
            base_key = f"{depth}:canonical"
            if base_key not in self._networks:
                self._networks[base_key] = build_network(depth)
            gauge = CANONICAL_GAUGE if canonical else self.gauge()
            base = self._networks[base_key]
            self._networks[key] = base if gauge.is_canonical else base.with_gauge(gauge)
        return self._networks[key]

    # -------------------------------------------------------------------------
    # ARTIFACTS
    # -------------------------------------------------------------------------

    def artifact_name(self, stem: str, ext: str) -> str:
        return f"{self.cfg['output_prefix']}_{stem}.{ext}"

    def artifact_path(self, stem: str, ext: str) -> str:
        return os.path.join(self.cfg["output_dir"], self.artifact_name(stem, ext))

    def write_csv(self, stem: str, rows: Sequence[Mapping[str, Any]]) -> str:
        path = write_csv(
            self.cfg["output_dir"], self.artifact_name(stem, "csv"), rows,
            config_hash=self.config_hash, seed=self.seed,
        )
        self.artifacts.append(path)
        return path

    def write_json(self, stem: str, payload: Mapping[str, Any]) -> str:
        path = write_json(
            self.cfg["output_dir"], self.artifact_name(stem, "json"), payload,
            config_hash=self.config_hash, seed=self.seed,
        )
        self.artifacts.append(path)
        return path
