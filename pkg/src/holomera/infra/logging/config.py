from __future__ import annotations

"""
Logging Configuration Models.

Settings of the logging subsystem. A run starts with console-only logging
and is re-targeted onto ``<output_dir>/holomera.log`` once the validated
configuration (and therefore its hash) is known.
"""

import logging
from dataclasses import dataclass, replace
from typing import Optional

NO_RUN_TAG: str = "-"


@dataclass(frozen=True)
class LoggingConfig:
    """
    Immutable settings for logging initialization.

    Attributes:
        level: Minimum severity level name (DEBUG, INFO, WARNING, ...).
        console: Emit records on stderr.
        log_file: Optional path of the per-run log file.
        run_tag: Config hash stamped on every file record.
        capture_warnings: Route warnings.warn (e.g. spectrum degeneracy
            diagnostics) through the logging tree.
        max_bytes: Rotation threshold of the log file.
        backup_count: Number of rotated segments to keep.
        console_fmt: Terminal format.
        file_fmt: File format; may reference ``%(run_tag)s``.
        datefmt: Timestamp format.
    """
    level: str = "INFO"
    console: bool = True
    log_file: Optional[str] = None
    run_tag: str = NO_RUN_TAG
    capture_warnings: bool = True

    max_bytes: int = 8 * 1024 * 1024
    backup_count: int = 2

    console_fmt: str = "%(levelname)s | %(message)s"
    file_fmt: str = "%(asctime)s | %(run_tag)s | %(levelname)s | %(threadName)s | %(name)s | %(message)s"
    datefmt: str = "%Y-%m-%d %H:%M:%S"

    @classmethod
    def for_cli(cls, debug: bool) -> LoggingConfig:
        """Console-only bootstrap configuration of a CLI invocation."""
        return cls(level="DEBUG" if debug else "INFO", console=True, log_file=None)

    def for_run(self, log_file: str, run_tag: str) -> LoggingConfig:
        """Copy of these settings writing to a run log under ``run_tag``."""
        return replace(self, log_file=log_file, run_tag=run_tag or NO_RUN_TAG)

    @property
    def level_int(self) -> int:
        """Numeric level; unknown names fall back to INFO."""
        name = str(self.level or "").strip().upper()
        if hasattr(logging, "getLevelNamesMapping"):
            mapping = logging.getLevelNamesMapping()
        else:  # Python < 3.11
            mapping = dict(logging._nameToLevel)
        return mapping.get(name, logging.INFO)
