from __future__ import annotations

"""
Logging Handlers and Filters.

Factories for the console and run-log handlers, the filter stamping the
run tag onto records, and the tagging that tells our handlers apart from
those installed by host applications or test runners.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import List, Optional

from holomera.infra.fs import safe_mkdir
from holomera.infra.logging.config import NO_RUN_TAG, LoggingConfig

_HANDLER_TAG_ATTR: str = "_holomera_handler"


class RunTagFilter(logging.Filter):
    """Attach ``record.run_tag`` so file formats can reference it."""

    def __init__(self, run_tag: str = NO_RUN_TAG) -> None:
        super().__init__()
        self.run_tag = run_tag

    def filter(self, record: logging.LogRecord) -> bool:
        if not hasattr(record, "run_tag"):
            record.run_tag = self.run_tag
        return True


# ==============================================================================
# HANDLER FACTORIES
# ==============================================================================

def build_handlers(cfg: LoggingConfig) -> List[logging.Handler]:
    """
    Build the sink handlers served by the queue listener.

    Args:
        cfg: Logging configuration.

    Returns:
        List[logging.Handler]: Console and/or run-log handlers (possibly empty).
    """
    sinks: List[logging.Handler] = []
    if cfg.console:
        sinks.append(_console_handler(cfg))
    if cfg.log_file:
        fh = _run_log_handler(cfg)
        if fh is not None:
            sinks.append(fh)
    return sinks


def _console_handler(cfg: LoggingConfig) -> logging.Handler:
    sh = logging.StreamHandler(sys.stderr)
    sh.setLevel(cfg.level_int)
    sh.setFormatter(logging.Formatter(cfg.console_fmt))
    _tag_handler(sh)
    return sh


def _run_log_handler(cfg: LoggingConfig) -> Optional[RotatingFileHandler]:
    """
    Open the rotating run log.

    Returns None when the file cannot be opened; the run then continues
    with console logging only.
    """
    assert cfg.log_file is not None
    parent = os.path.dirname(os.path.abspath(cfg.log_file))
    ok, err = safe_mkdir(parent)
    if not ok:
        sys.stderr.write(f"WARNING: cannot create log directory '{parent}': {err}\n")
        return None

    try:
        fh = RotatingFileHandler(
            cfg.log_file,
            maxBytes=int(cfg.max_bytes),
            backupCount=int(cfg.backup_count),
            encoding="utf-8",
        )
    except OSError as e:
        sys.stderr.write(f"WARNING: cannot open run log '{cfg.log_file}': {e}\n")
        return None

    fh.setLevel(cfg.level_int)
    fh.setFormatter(logging.Formatter(cfg.file_fmt, datefmt=cfg.datefmt))
    fh.addFilter(RunTagFilter(cfg.run_tag))
    _tag_handler(fh)
    return fh


# ==============================================================================
# OWNERSHIP TAGS
# ==============================================================================

def _tag_handler(handler: logging.Handler) -> None:
    setattr(handler, _HANDLER_TAG_ATTR, True)


def _is_our_handler(handler: logging.Handler) -> bool:
    return bool(getattr(handler, _HANDLER_TAG_ATTR, False))
