from __future__ import annotations

"""
Experiment Domain Data Models.

Result objects passed from the experiment runners to the interface layer.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from holomera.domain.errors import HolomeraError

# -----------------------------------------------------------------------------
# CORE DATA MODELS
# -----------------------------------------------------------------------------

@dataclass(frozen=True)
class ExperimentResult:
    """
    Outcome of one subcommand run.

    Attributes:
        ok: Flag indicating success or failure.
        command: Subcommand that produced the result.
        config_hash: Hash of the validated configuration.
        seed: Master seed of the run.
        output_dir: Directory holding the artifacts.
        artifacts: Paths of the written files.
        summary: Headline numbers of the run (JSON-serializable).
        error: Machine-readable error record when ``ok`` is False.
        exit_code: Process exit code mapped from the error family.
    """
    ok: bool
    command: str
    config_hash: str = ""
    seed: int = 0
    output_dir: str = ""
    artifacts: List[str] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)
    error: Dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0


# -----------------------------------------------------------------------------
# FACTORY FUNCTIONS
# -----------------------------------------------------------------------------

def create_error_result(
        command: str,
        exc: HolomeraError,
        cfg: Optional[Dict[str, Any]] = None,
        config_hash: str = "",
) -> ExperimentResult:
    """
    Build a failed result from a library exception.

    Args:
        command: Subcommand name.
        exc: The raised library error.
        cfg: Validated configuration, when validation got that far.
        config_hash: Hash of ``cfg``.

    Returns:
        ExperimentResult: Immutable error result carrying the exit code.
    """
    cfg = cfg or {}
    return ExperimentResult(
        ok=False,
        command=command,
        config_hash=config_hash,
        seed=int(cfg.get("seed", 0)),
        output_dir=str(cfg.get("output_dir", "")),
        error=exc.to_dict(),
        exit_code=exc.exit_code,
    )


def create_success_result(
        command: str,
        cfg: Dict[str, Any],
        config_hash: str,
        artifacts: List[str],
        summary: Optional[Dict[str, Any]] = None,
) -> ExperimentResult:
    """Build a successful result."""
    return ExperimentResult(
        ok=True,
        command=command,
        config_hash=config_hash,
        seed=int(cfg["seed"]),
        output_dir=str(cfg["output_dir"]),
        artifacts=list(artifacts),
        summary=summary or {},
    )
