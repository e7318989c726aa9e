from __future__ import annotations

"""Queue-backed logging for CLI runs and threaded sweeps."""

from .config import LoggingConfig
from .core import configure_logging, get_logger, get_run_log_path, shutdown_logging
from .handlers import RunTagFilter

__all__ = [
    "LoggingConfig",
    "RunTagFilter",
    "configure_logging",
    "get_logger",
    "get_run_log_path",
    "shutdown_logging",
]
