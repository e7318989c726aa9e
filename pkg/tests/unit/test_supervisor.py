from __future__ import annotations

"""
Unit tests for the Global Supervisor.

Verifies that crashes outside the library error hierarchy are reported as
a JSON record with exit code 1.
"""

import json
import sys
from unittest.mock import patch

import pytest

from holomera import main as supervisor


def test_unexpected_exception_is_reported(capsys: pytest.CaptureFixture) -> None:
    """TC-01: Verify an unexpected crash exits with 1 and prints a JSON record."""
    with patch.object(sys, "excepthook", sys.excepthook), \
            patch("holomera.interface.cli.app.main", side_effect=RuntimeError("boom")):
        code = supervisor.main()

    assert code == supervisor.EXIT_UNEXPECTED
    last = capsys.readouterr().err.strip().splitlines()[-1]
    assert json.loads(last) == {"error": "RuntimeError", "message": "boom", "exit_code": 1}


def test_cli_exit_code_passes_through() -> None:
    """TC-02: Verify CLI exit codes are returned unchanged."""
    with patch.object(sys, "excepthook", sys.excepthook), \
            patch("holomera.interface.cli.app.main", return_value=3):
        assert supervisor.main() == 3
