from __future__ import annotations

"""
Unit tests for the CLI Application Controller.

Verifies:
1. Exit codes for success and for each error family.
2. JSON error records on stderr and JSON results on stdout.
3. Configuration merging (file < flags) and --dump-config.
4. Failed results and interrupts from the orchestrator.
"""

import json
from pathlib import Path
from typing import Any, Dict
from unittest.mock import patch

import pytest

from holomera.domain.errors import NumericalCheckError
from holomera.domain.experiment_models import ExperimentResult
from holomera.interface.cli.app import main


def _error_record(stderr: str) -> Dict[str, Any]:
    for line in reversed(stderr.splitlines()):
        line = line.strip()
        if line.startswith("{") and "exit_code" in line:
            return json.loads(line)
    raise AssertionError(f"No error record in stderr:\n{stderr}")


def test_dump_config_merges_file_and_flags(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """TC-01: Verify flags override the config file and nothing is executed."""
    cfg = tmp_path / "run.cfg"
    cfg.write_text("depth = 5\nseed = 11\n", encoding="utf-8")

    code = main(["gs-energy", "-c", str(cfg), "--d", "6", "-o", str(tmp_path / "out"), "--dump-config"])

    assert code == 0
    dumped = json.loads(capsys.readouterr().out)
    assert dumped["depth"] == 6
    assert dumped["seed"] == 11
    assert not (tmp_path / "out").exists()


def test_config_error_exit_code(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """TC-02: Verify invalid depth exits with 2 and a JSON record."""
    code = main(["hologron-1", "--d", "2", "-o", str(tmp_path)])

    assert code == 2
    record = _error_record(capsys.readouterr().err)
    assert record["error"] == "ConfigError"
    assert record["exit_code"] == 2


def test_capacity_error_exit_code(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """TC-03: Verify oversized requests exit with 3."""
    code = main(["verify-ed", "--n", "32", "-o", str(tmp_path)])

    assert code == 3
    assert _error_record(capsys.readouterr().err)["error"] == "CapacityError"


def test_missing_config_file(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """TC-04: Verify a missing config file is a configuration error."""
    assert main(["gs-energy", "-c", str(tmp_path / "nope.cfg")]) == 2


def test_json_result_on_stdout(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """TC-05: Verify --json prints the full result and logs go to the run log."""
    code = main(["ads-predict", "--d", "5", "-o", str(tmp_path), "--prefix", "cli", "--json"])

    assert code == 0
    result = json.loads(capsys.readouterr().out)
    assert result["ok"] is True
    assert result["command"] == "ads-predict"
    assert len(result["artifacts"]) == 4
    assert (tmp_path / "cli_ads_predict.json").exists()
    assert (tmp_path / "holomera.log").exists()


def test_human_summary(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """TC-06: Verify the plain-text summary lists the artifacts."""
    code = main(["verify-ed", "--n", "8", "-o", str(tmp_path)])

    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("verify-ed: OK")
    assert "Artifacts:" in out


def test_failed_result_maps_exit_code(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    """TC-07: Verify a failed orchestrator result is printed and its exit code returned."""
    record = NumericalCheckError("unitality residual 1e-3").to_dict()
    failed = ExperimentResult(ok=False, command="spectrum", error=record, exit_code=record["exit_code"])

    with patch("holomera.interface.cli.app.run_experiment", return_value=failed) as mock_run:
        code = main(["spectrum", "--k", "3", "-o", str(tmp_path)])

    assert code == 4
    mock_run.assert_called_once()
    assert mock_run.call_args.args[0] == "spectrum"
    assert _error_record(capsys.readouterr().err)["error"] == "NumericalCheckError"


def test_keyboard_interrupt(tmp_path: Path) -> None:
    """TC-08: Verify an interrupted run exits with 130."""
    with patch("holomera.interface.cli.app.run_experiment", side_effect=KeyboardInterrupt):
        assert main(["gs-energy", "--d", "3", "-o", str(tmp_path)]) == 130
