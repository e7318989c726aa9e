from __future__ import annotations

"""
Unit tests for the Experiment Configuration Domain.

Verifies:
1. Loading of key = value, JSON and TOML configuration files.
2. Error reporting for missing or malformed files.
3. Hash stability and exclusion of non-semantic keys.
4. Cache directory resolution order.
"""

import json
import os
from pathlib import Path

import pytest

from holomera.domain.config import (
    config_hash,
    get_default_config,
    load_config_file,
    parse_key_values,
    resolve_cache_dir,
)
from holomera.domain.errors import ConfigError


def test_parse_key_values() -> None:
    """TC-01: Verify JSON literals, bare strings, comments and blank lines."""
    text = "\n".join([
        "# experiment",
        "depth = 6",
        "",
        "noise_eps = [0.01, 0.02]   # strengths",
        "gauge = random",
        "noise_centered = true",
    ])
    data = parse_key_values(text)

    assert data == {"depth": 6, "noise_eps": [0.01, 0.02], "gauge": "random", "noise_centered": True}


def test_parse_key_values_rejects_malformed_line() -> None:
    """TC-02: Verify lines without '=' report their position."""
    with pytest.raises(ConfigError, match=":2:"):
        parse_key_values("depth = 6\njust a line", source="cfg.txt")


def test_load_key_value_file(tmp_path: Path) -> None:
    """TC-03: Verify the native flat format."""
    path = tmp_path / "run.cfg"
    path.write_text("depth = 5\nseed = 3\n", encoding="utf-8")
    assert load_config_file(str(path)) == {"depth": 5, "seed": 3}


def test_load_json_and_toml(tmp_path: Path) -> None:
    """TC-04: Verify JSON files and TOML files with a [holomera] table."""
    js = tmp_path / "run.json"
    js.write_text(json.dumps({"depth": 7}), encoding="utf-8")
    toml = tmp_path / "run.toml"
    toml.write_text("[holomera]\ndepth = 9\nnoise_eps = [0.1]\n", encoding="utf-8")
    flat = tmp_path / "flat.toml"
    flat.write_text("k = 4\n", encoding="utf-8")

    assert load_config_file(str(js)) == {"depth": 7}
    assert load_config_file(str(toml)) == {"depth": 9, "noise_eps": [0.1]}
    assert load_config_file(str(flat)) == {"k": 4}


def test_load_errors(tmp_path: Path) -> None:
    """TC-05: Verify missing, malformed and non-mapping files raise ConfigError."""
    with pytest.raises(ConfigError):
        load_config_file(str(tmp_path / "missing.cfg"))

    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config_file(str(bad))

    listing = tmp_path / "list.json"
    listing.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config_file(str(listing))


def test_config_hash_ignores_execution_keys() -> None:
    """TC-06: Verify threads and output location do not change the hash."""
    base = get_default_config()
    moved = dict(base, threads=8, output_dir="/elsewhere", output_prefix="x", cache_dir="/c")
    changed = dict(base, depth=base["depth"] + 1)

    assert config_hash(base) == config_hash(moved)
    assert config_hash(base) != config_hash(changed)
    assert len(config_hash(base)) == 12


def test_resolve_cache_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    """TC-07: Verify explicit setting, then environment, then home directory."""
    monkeypatch.setenv("HOLOMERA_CACHE", str(tmp_path / "env"))
    assert resolve_cache_dir({"cache_dir": str(tmp_path / "cfg")}) == str(tmp_path / "cfg")
    assert resolve_cache_dir({"cache_dir": ""}) == str(tmp_path / "env")

    monkeypatch.delenv("HOLOMERA_CACHE")
    assert resolve_cache_dir({}).endswith(os.path.join(".holomera", "cache"))
