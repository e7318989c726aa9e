from __future__ import annotations

"""
Unit tests for Domain Errors and Experiment Result Models.

Verifies:
1. Error families carry their CLI exit codes.
2. Error serialization.
3. Result factories.
"""

import pytest

from holomera.domain.errors import (
    CapacityError,
    ConfigError,
    DuplicateInsertionError,
    FitDomainError,
    HolomeraError,
    NumericalCheckError,
    SiteIndexError,
)
from holomera.domain.experiment_models import create_error_result, create_success_result


@pytest.mark.parametrize(
    "exc_type,code",
    [
        (ConfigError, 2),
        (SiteIndexError, 2),
        (DuplicateInsertionError, 2),
        (CapacityError, 3),
        (NumericalCheckError, 4),
        (FitDomainError, 4),
    ],
)
def test_exit_codes(exc_type, code: int) -> None:
    """TC-01: Verify each error family maps onto its exit code."""
    assert exc_type("x").exit_code == code
    assert issubclass(exc_type, HolomeraError)


def test_config_errors_are_value_errors() -> None:
    """TC-02: Verify ConfigError stays catchable as ValueError and SiteIndexError as IndexError."""
    assert isinstance(ConfigError("x"), ValueError)
    assert isinstance(SiteIndexError("x"), IndexError)


def test_error_to_dict() -> None:
    """TC-03: Verify the machine-readable error record."""
    record = CapacityError("too big").to_dict()
    assert record == {"error": "CapacityError", "message": "too big", "exit_code": 3}


def test_error_result_factory() -> None:
    """TC-04: Verify failed results carry the error and exit code."""
    result = create_error_result("spectrum", ConfigError("bad k"), {"seed": 4, "output_dir": "/tmp/x"}, "abc")

    assert result.ok is False
    assert result.exit_code == 2
    assert result.seed == 4
    assert result.error["message"] == "bad k"
    assert create_error_result("fit", FitDomainError("few")).seed == 0


def test_success_result_factory() -> None:
    """TC-05: Verify successful results copy artifacts and summary."""
    artifacts = ["/tmp/a.csv"]
    result = create_success_result("gs-energy", {"seed": 1, "output_dir": "/tmp"}, "h", artifacts, {"e": 1.0})
    artifacts.append("/tmp/b.csv")

    assert result.ok is True
    assert result.exit_code == 0
    assert result.artifacts == ["/tmp/a.csv"]
    assert result.summary == {"e": 1.0}
