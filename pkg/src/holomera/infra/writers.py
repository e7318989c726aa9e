from __future__ import annotations

"""
Result Artifact Writers.

Every artifact opens with a provenance header naming the library version,
the configuration hash and the master seed. CSV floats are written with
``%.17g`` so that values round-trip exactly.
"""

import csv
import json
import logging
from typing import Any, Dict, List, Mapping, Sequence

import numpy as np

from holomera.domain.constants import CSV_FLOAT_FORMAT, __version__
from holomera.infra.fs import ensure_within, safe_mkdir

logger = logging.getLogger(__name__)


def provenance_header(config_hash: str, seed: int) -> str:
    """Header line shared by CSV and JSON artifacts."""
    return f"# holomera v{__version__} config={config_hash} seed={seed}"


def write_csv(
        output_dir: str,
        file_name: str,
        rows: Sequence[Mapping[str, Any]],
        *,
        config_hash: str,
        seed: int,
) -> str:
    """
    Write rows as CSV with a provenance comment line.

    Args:
        output_dir: Destination directory (created if needed).
        file_name: Artifact name, must stay inside ``output_dir``.
        rows: Records sharing the keys of the first row.
        config_hash: Hash of the validated configuration.
        seed: Master seed of the run.

    Returns:
        str: Absolute path of the written file.
    """
    path = _prepare(output_dir, file_name)
    columns: List[str] = list(rows[0].keys()) if rows else []

    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(provenance_header(config_hash, seed) + "\n")
        writer = csv.writer(f)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_format_cell(row.get(c)) for c in columns])

    logger.info(f"Wrote {len(rows)} rows to {path}")
    return path


def write_json(
        output_dir: str,
        file_name: str,
        payload: Mapping[str, Any],
        *,
        config_hash: str,
        seed: int,
) -> str:
    """Write a JSON artifact; the provenance header is stored under ``_provenance``."""
    path = _prepare(output_dir, file_name)
    document: Dict[str, Any] = {
        "_provenance": provenance_header(config_hash, seed).lstrip("# "),
        **payload,
    }
    with open(path, "w", encoding="utf-8") as f:
        json.dump(_jsonable(document), f, indent=2, sort_keys=False)
        f.write("\n")

    logger.info(f"Wrote JSON artifact {path}")
    return path


def read_csv(path: str) -> List[Dict[str, float]]:
    """
    Read a numeric CSV artifact written by :func:`write_csv`.

    Comment lines are skipped; non-numeric cells are kept as strings.
    """
    with open(path, "r", encoding="utf-8", newline="") as f:
        lines = [line for line in f if not line.startswith("#")]
    out: List[Dict[str, Any]] = []
    for record in csv.DictReader(lines):
        parsed: Dict[str, Any] = {}
        for key, value in record.items():
            try:
                parsed[key] = float(value)
            except (TypeError, ValueError):
                parsed[key] = value
        out.append(parsed)
    return out


# -----------------------------------------------------------------------------
# PRIVATE HELPERS
# -----------------------------------------------------------------------------

def _prepare(output_dir: str, file_name: str) -> str:
    ok, err = safe_mkdir(output_dir)
    if not ok:
        raise OSError(f"Cannot create output directory '{output_dir}': {err}")
    return ensure_within(output_dir, file_name)


def _format_cell(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (float, np.floating)):
        return CSV_FLOAT_FORMAT % float(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if value is None:
        return ""
    return str(value)


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Mapping):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        obj = complex(obj)
        return {"re": obj.real, "im": obj.imag}
    return obj
