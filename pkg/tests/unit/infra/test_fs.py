from __future__ import annotations

"""
Unit tests for the FileSystem Infrastructure Layer.

Verifies:
1. Artifact paths cannot escape the output directory.
2. Directory creation reports failures instead of raising.
3. Path normalization.
"""

import os
from pathlib import Path

import pytest

from holomera.domain.errors import ConfigError
from holomera.infra.fs import ensure_within, normalize_path, safe_mkdir


def test_ensure_within_accepts_plain_names(tmp_path: Path) -> None:
    """TC-01: Verify plain and nested artifact names resolve inside the base."""
    assert ensure_within(str(tmp_path), "a.csv") == str(tmp_path / "a.csv")
    assert ensure_within(str(tmp_path), "sub/b.json") == str(tmp_path / "sub" / "b.json")


@pytest.mark.parametrize("name", ["../escape.csv", "sub/../../escape.csv"])
def test_ensure_within_rejects_escapes(tmp_path: Path, name: str) -> None:
    """TC-02: Verify traversal outside the output directory raises ConfigError."""
    with pytest.raises(ConfigError):
        ensure_within(str(tmp_path), name)


def test_safe_mkdir(tmp_path: Path) -> None:
    """TC-03: Verify nested creation and failure reporting."""
    ok, err = safe_mkdir(str(tmp_path / "a" / "b"))
    assert ok and err is None
    assert (tmp_path / "a" / "b").is_dir()

    blocker = tmp_path / "file"
    blocker.write_text("x", encoding="utf-8")
    ok, err = safe_mkdir(str(blocker / "child"))
    assert not ok
    assert err


def test_normalize_path(tmp_path: Path) -> None:
    """TC-04: Verify empty input uses the fallback and user paths are expanded."""
    assert normalize_path("", str(tmp_path)) == str(tmp_path)
    assert normalize_path(None, str(tmp_path)) == str(tmp_path)
    assert normalize_path("~/x", "/") == os.path.join(os.path.expanduser("~"), "x")
