from __future__ import annotations

"""
Experiment Orchestrator.

Facade between the interface layer and the numerical core: validates the
configuration, prepares the output directory and run log, dispatches to the
subcommand runner and converts library errors into result objects.
"""

import logging
import time
from typing import Any, Dict, Optional

from holomera.core.pipeline.context import RunContext
from holomera.core.pipeline.experiments import EXPERIMENTS
from holomera.core.pipeline.validator import validate_config
from holomera.domain.config import config_hash
from holomera.domain.errors import ConfigError, HolomeraError
from holomera.domain.experiment_models import (
    ExperimentResult,
    create_error_result,
    create_success_result,
)
from holomera.infra.fs import safe_mkdir

logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# PIPELINE ORCHESTRATION
# -----------------------------------------------------------------------------

def run_experiment(
        command: str,
        config: Optional[Dict[str, Any]],
        *,
        strict: bool = False,
) -> ExperimentResult:
    """
    Execute one subcommand.

    Args:
        command: Registered subcommand name (e.g. ``hologron-2``).
        config: Raw configuration (defaults < file < flags already merged).
        strict: Reject unknown keys and type mismatches instead of coercing.

    Returns:
        ExperimentResult: Success with artifacts and summary, or failure
        carrying the machine-readable error and its exit code.
    """
    cfg: Optional[Dict[str, Any]] = None
    digest = ""
    try:
        if command not in EXPERIMENTS:
            raise ConfigError(f"Unknown subcommand '{command}'")

        # 1. Validation Stage
        cfg, warnings = validate_config(config, strict=strict)
        for warning in warnings:
            logger.warning(f"Configuration Constraint: {warning}")
        digest = config_hash(cfg)

        # 2. Setup Stage
        ok, err = safe_mkdir(cfg["output_dir"])
        if not ok:
            raise ConfigError(f"Cannot create output directory '{cfg['output_dir']}': {err}")

        # 3. Execution Stage
        logger.info(f"Running {command} (config={digest}, seed={cfg['seed']})")
        ctx = RunContext(cfg, digest)
        started = time.perf_counter()
        summary = EXPERIMENTS[command](ctx)
        logger.info(f"{command} finished in {time.perf_counter() - started:.2f}s, {len(ctx.artifacts)} artifacts")

    except HolomeraError as e:
        logger.error(f"{command} failed: {type(e).__name__}: {e}")
        return create_error_result(command, e, cfg, digest)

    return create_success_result(command, cfg, digest, ctx.artifacts, summary)
