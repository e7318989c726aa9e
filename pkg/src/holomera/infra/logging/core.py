from __future__ import annotations

"""
Logging Core Orchestrator.

Root logger setup for CLI runs and library use. Records travel through a
single QueueHandler to a QueueListener thread, so the worker threads of a
gauge or noise sweep never block on file I/O. Configuration is idempotent
unless forced; a forced call re-targets the sinks (console bootstrap first,
then the per-run log once the output directory is known).
"""

import atexit
import logging
import os
import queue
import sys
from logging.handlers import QueueHandler, QueueListener
from typing import Optional

from holomera.domain.constants import APP_NAME
from holomera.infra.logging.config import LoggingConfig
from holomera.infra.logging.handlers import _is_our_handler, _tag_handler, build_handlers

_CONFIGURED_FLAG_ATTR: str = "_holomera_configured"
_QUEUE_LISTENER_ATTR: str = "_holomera_queue_listener"


# ==============================================================================
# PUBLIC API
# ==============================================================================

def get_run_log_path(output_dir: str) -> str:
    """
    Resolve the per-run log file inside an experiment output directory.

    Args:
        output_dir: Directory receiving the experiment artifacts.

    Returns:
        str: Absolute path of ``<output_dir>/holomera.log``.
    """
    return os.path.join(os.path.abspath(output_dir), f"{APP_NAME}.log")


def configure_logging(cfg: LoggingConfig, *, force: bool = False) -> logging.Logger:
    """
    Configure the root logger.

    Args:
        cfg: Logging configuration.
        force: Replace our existing handlers even if already configured.

    Returns:
        logging.Logger: The root logger.
    """
    root = logging.getLogger()
    if getattr(root, _CONFIGURED_FLAG_ATTR, False) and not force:
        return root

    _detach(root)
    try:
        root.setLevel(cfg.level_int)
        logging.captureWarnings(cfg.capture_warnings)

        sinks = build_handlers(cfg)
        if not sinks:
            return root

        log_queue: queue.Queue[logging.LogRecord] = queue.Queue(-1)
        listener = QueueListener(log_queue, *sinks, respect_handler_level=True)
        listener.start()
        atexit.register(_safe_stop_listener, listener)

        queue_handler = QueueHandler(log_queue)
        _tag_handler(queue_handler)
        root.addHandler(queue_handler)

        setattr(root, _QUEUE_LISTENER_ATTR, listener)
        setattr(root, _CONFIGURED_FLAG_ATTR, True)
        return root
    except Exception as e:
        return _emergency_console(root, e)


def shutdown_logging() -> None:
    """Flush the run log and detach our handlers (end of a CLI run)."""
    root = logging.getLogger()
    _detach(root)
    setattr(root, _CONFIGURED_FLAG_ATTR, False)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


# ==============================================================================
# PRIVATE HELPERS
# ==============================================================================

def _detach(root: logging.Logger) -> None:
    """Stop our listener (draining its queue) and close our handlers."""
    listener = getattr(root, _QUEUE_LISTENER_ATTR, None)
    if listener is not None:
        _safe_stop_listener(listener)
        setattr(root, _QUEUE_LISTENER_ATTR, None)

    for h in list(root.handlers):
        if _is_our_handler(h):
            root.removeHandler(h)
            try:
                h.close()
            except Exception:
                pass


def _emergency_console(root: logging.Logger, cause: Exception) -> logging.Logger:
    """Plain stderr logging after a failed setup."""
    _detach(root)
    sh = logging.StreamHandler(sys.stderr)
    sh.setFormatter(logging.Formatter("FALLBACK | %(levelname)s | %(message)s"))
    _tag_handler(sh)
    root.addHandler(sh)
    root.setLevel(logging.INFO)
    root.warning(f"Logging setup failed ({cause}). Switched to emergency console.")
    return root


def _safe_stop_listener(listener: Optional[QueueListener]) -> None:
    """Stop a listener, tolerating double stops from atexit and test resets."""
    if not listener:
        return
    try:
        if getattr(listener, "_thread", None) is not None:
            listener.stop()
    except Exception:
        pass
