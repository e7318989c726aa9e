from __future__ import annotations

"""
Main Entry Point and Global Supervisor.

Runs the CLI from a source checkout and traps crashes outside the library
error hierarchy: they are logged with their full trace and reported on
stderr as the same kind of JSON record the CLI prints for known errors,
with exit code 1.
"""

import json
import logging
import os
import sys
import traceback
from types import TracebackType
from typing import Optional

EXIT_UNEXPECTED: int = 1


def _ensure_src_on_path() -> None:
    """Make ``src/`` importable when this file is executed directly."""
    src_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    if src_dir not in sys.path:
        sys.path.insert(0, src_dir)


# -----------------------------------------------------------------------------
# GLOBAL SUPERVISOR
# -----------------------------------------------------------------------------

def report_crash(
        exctype: type[BaseException],
        value: BaseException,
        tb: Optional[TracebackType],
) -> None:
    """
    Log an unexpected exception and print its JSON record and trace on stderr.

    Args:
        exctype: Exception class.
        value: Exception instance.
        tb: Traceback object.
    """
    stack_trace = "".join(traceback.format_exception(exctype, value, tb))
    logging.getLogger("holomera.supervisor").critical(f"Unhandled {exctype.__name__}: {value}\n{stack_trace}")

    record = {"error": exctype.__name__, "message": str(value), "exit_code": EXIT_UNEXPECTED}
    print(stack_trace, file=sys.stderr)
    print(json.dumps(record, ensure_ascii=False), file=sys.stderr)


def _excepthook(exctype: type[BaseException], value: BaseException, tb: Optional[TracebackType]) -> None:
    report_crash(exctype, value, tb)
    sys.exit(EXIT_UNEXPECTED)


# -----------------------------------------------------------------------------
# EXECUTION ROUTING
# -----------------------------------------------------------------------------

def main() -> int:
    """
    Delegate to the CLI controller.

    Returns:
        int: Process exit code.
    """
    _ensure_src_on_path()
    sys.excepthook = _excepthook
    try:
        from holomera.interface.cli.app import main as cli_main
        return cli_main()
    except SystemExit:
        raise
    except Exception as e:
        report_crash(type(e), e, e.__traceback__)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
