from __future__ import annotations

"""
Command Line Interface (CLI) Application Controller.

Orchestrates the CLI lifecycle: logging bootstrap, merging of configuration
sources (defaults < config file < flags), experiment execution and result
rendering. Failures are reported as a machine-readable JSON record on
stderr and mapped onto the exit codes 2 (configuration), 3 (capacity) and
4 (numerical check).
"""

import json
import sys
from dataclasses import asdict
from typing import Any, Dict, List, Optional

from holomera.core.pipeline.engine import run_experiment
from holomera.core.pipeline.validator import validate_config
from holomera.domain.config import config_hash, load_config_file
from holomera.domain.errors import HolomeraError
from holomera.domain.experiment_models import ExperimentResult
from holomera.infra.logging import (
    LoggingConfig,
    configure_logging,
    get_logger,
    get_run_log_path,
    shutdown_logging,
)
from holomera.interface.cli import args as cli_args

logger = get_logger(__name__)

# -----------------------------------------------------------------------------
# ENTRYPOINT ORCHESTRATOR
# -----------------------------------------------------------------------------

def main(argv: Optional[List[str]] = None) -> int:
    """
    Execute the main CLI application workflow.

    Args:
        argv: Optional list of command line arguments. Defaults to sys.argv.

    Returns:
        int: Process exit code (0 success, 2 config, 3 capacity, 4 numerical check).
    """
    if sys.platform == "win32":
        if hasattr(sys.stdout, "reconfigure"):
            sys.stdout.reconfigure(encoding="utf-8")
        if hasattr(sys.stderr, "reconfigure"):
            sys.stderr.reconfigure(encoding="utf-8")

    # 1. Argument parsing phase
    parser = cli_args.build_parser()
    args = parser.parse_args(argv)

    # 2. Logging bootstrap (console only until the output directory is known)
    log_cfg = LoggingConfig.for_cli(bool(args.debug))
    configure_logging(log_cfg, force=True)

    try:
        # 3. Resolve configuration hierarchy
        raw_conf = _resolve_config(args)
        clean_conf, _ = validate_config(raw_conf, strict=bool(args.strict))

        if args.dump_config:
            print(json.dumps(clean_conf, ensure_ascii=False, indent=2))
            return 0

        # 4. Per-run log file inside the output directory, tagged with the config hash
        run_log = get_run_log_path(clean_conf["output_dir"])
        configure_logging(log_cfg.for_run(run_log, config_hash(clean_conf)), force=True)

        # 5. Experiment execution phase
        result = run_experiment(args.command, raw_conf, strict=bool(args.strict))

    except HolomeraError as e:
        _print_error(e.to_dict())
        return e.exit_code
    except KeyboardInterrupt:
        logger.warning("Interrupted by user.")
        return 130
    finally:
        shutdown_logging()

    # 6. Output rendering phase
    if not result.ok:
        _print_error(result.error)
        return result.exit_code

    if args.json_output:
        print(json.dumps(asdict(result), ensure_ascii=False, indent=2, default=str))
    else:
        _print_human_summary(result)
    return 0


# -----------------------------------------------------------------------------
# CONFIGURATION MERGING
# -----------------------------------------------------------------------------

def _resolve_config(args: Any) -> Dict[str, Any]:
    """Config file values overlaid by the flags the user set."""
    conf: Dict[str, Any] = {}
    if args.config_file:
        conf.update(load_config_file(args.config_file))
    conf.update(cli_args.args_to_overrides(args))
    return conf


# -----------------------------------------------------------------------------
# VIEW RENDERING
# -----------------------------------------------------------------------------

def _print_error(record: Dict[str, Any]) -> None:
    print(json.dumps(record, ensure_ascii=False), file=sys.stderr)


def _print_human_summary(result: ExperimentResult) -> None:
    """
    Print the headline numbers and artifact list of a successful run.

    Args:
        result: The experiment result to render.
    """
    print(f"{result.command}: OK (config={result.config_hash}, seed={result.seed})")
    for key, value in result.summary.items():
        if isinstance(value, float):
            print(f"  {key}: {value:.10g}")
        elif isinstance(value, (int, str, bool)) or value is None:
            print(f"  {key}: {value}")
        elif isinstance(value, dict) and all(isinstance(v, float) for v in value.values()):
            for sub, v in value.items():
                print(f"  {key}.{sub}: {v:.10g}")
    if result.artifacts:
        print("Artifacts:")
        for path in result.artifacts:
            print(f"  - {path}")


# -----------------------------------------------------------------------------
# CLI ENTRYPOINT
# -----------------------------------------------------------------------------

if __name__ == "__main__":
    sys.exit(main())
