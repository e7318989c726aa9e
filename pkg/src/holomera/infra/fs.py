from __future__ import annotations

"""
FileSystem Infrastructure Layer.

Path normalization and guarded directory creation for experiment outputs
and the spectrum cache.
"""

import os
from typing import Optional, Tuple

from holomera.domain.errors import ConfigError


def normalize_path(path: Optional[str], fallback: str) -> str:
    """
    Expand and absolutize a user path.

    Args:
        path: Raw path (may contain ``~`` or be empty).
        fallback: Used when ``path`` is empty.

    Returns:
        str: Absolute normalized path.
    """
    raw = (path or "").strip() or fallback
    return os.path.abspath(os.path.expanduser(raw))


def safe_mkdir(path: str) -> Tuple[bool, Optional[str]]:
    """
    Create a directory hierarchy without raising.

    Returns:
        Tuple[bool, Optional[str]]: (success, error message).
    """
    try:
        os.makedirs(path, exist_ok=True)
        return True, None
    except OSError as e:
        return False, str(e)


def ensure_within(base_dir: str, file_name: str) -> str:
    """
    Join an artifact name onto the output directory, refusing escapes.

    Args:
        base_dir: Output directory.
        file_name: Artifact file name supplied by configuration.

    Returns:
        str: Absolute artifact path.

    Raises:
        ConfigError: If the resulting path leaves ``base_dir``.
    """
    base = os.path.abspath(base_dir)
    target = os.path.abspath(os.path.join(base, file_name))
    if os.path.commonpath([base, target]) != base:
        raise ConfigError(f"Artifact path escapes output directory: {file_name}")
    return target
