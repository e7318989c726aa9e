from __future__ import annotations

"""
Superoperator Cache.

Thread-safe disk cache for dense superoperator matrices. Matrices are
stored as ``.npy`` files next to a SQLite index keyed by a composite hash of
(k, variant, window offsets, gate coefficients). Any storage failure
disables the cache for the rest of the session instead of failing the run.
"""

import hashlib
import logging
import os
import sqlite3
import threading
import time
from typing import Optional

import numpy as np

from holomera.core.network.gates import GateSet, analytic_gates
from holomera.core.spectra.superoperator import Superoperator, build_superoperator, variant_offsets
from holomera.infra.fs import safe_mkdir

logger = logging.getLogger(__name__)

# Below this support size rebuilding is cheaper than a disk round-trip.
DEFAULT_MIN_CACHED_K = 5


class SpectrumCache:
    """
    Persistent store of built superoperators.

    Args:
        cache_dir: Directory holding the index database and matrix files.
        min_k: Smallest support size that is cached.
    """

    DB_FILENAME = "superoperators.db"

    def __init__(self, cache_dir: str, min_k: int = DEFAULT_MIN_CACHED_K) -> None:
        self._dir = cache_dir
        self._db_path = os.path.join(cache_dir, self.DB_FILENAME)
        self._lock = threading.Lock()
        self._enabled = True
        self._min_k = min_k

        self._init_db()

    @property
    def enabled(self) -> bool:
        return self._enabled

    def _init_db(self) -> None:
        ok, err = safe_mkdir(self._dir)
        if not ok:
            logger.warning(f"SpectrumCache: Cannot create {self._dir}. Caching disabled. Error: {err}")
            self._enabled = False
            return
        try:
            with self._lock:
                with sqlite3.connect(self._db_path) as conn:
                    conn.execute("""
                        CREATE TABLE IF NOT EXISTS superoperators (
                            composite_hash TEXT PRIMARY KEY,
                            k INTEGER,
                            variant TEXT,
                            file_name TEXT,
                            created_at REAL
                        )
                    """)
                    conn.commit()
            logger.debug(f"SpectrumCache: Index initialized at {self._db_path}")
        except sqlite3.Error as e:
            logger.warning(f"SpectrumCache: Initialization failure. Caching disabled. Error: {e}")
            self._enabled = False

    # -------------------------------------------------------------------------
    # ENTRIES
    # -------------------------------------------------------------------------

    def get_entry(self, composite_hash: str) -> Optional[np.ndarray]:
        """Load a cached matrix, or None on miss."""
        if not self._enabled:
            return None
        try:
            with self._lock:
                with sqlite3.connect(self._db_path) as conn:
                    row = conn.execute(
                        "SELECT file_name FROM superoperators WHERE composite_hash = ?",
                        (composite_hash,),
                    ).fetchone()
                if row is None:
                    return None
                return np.load(os.path.join(self._dir, row[0]), allow_pickle=False)
        except (sqlite3.Error, OSError, ValueError) as e:
            logger.warning(f"SpectrumCache: Read error for hash {composite_hash[:8]}: {e}")
            return None

    def set_entry(self, composite_hash: str, op: Superoperator) -> None:
        """Store a matrix; failures disable the cache."""
        if not self._enabled:
            return
        file_name = f"{composite_hash}.npy"
        try:
            with self._lock:
                np.save(os.path.join(self._dir, file_name), op.matrix, allow_pickle=False)
                with sqlite3.connect(self._db_path) as conn:
                    conn.execute(
                        "INSERT OR REPLACE INTO superoperators "
                        "(composite_hash, k, variant, file_name, created_at) VALUES (?, ?, ?, ?, ?)",
                        (composite_hash, op.k, op.variant, file_name, time.time()),
                    )
                    conn.commit()
        except (sqlite3.Error, OSError) as e:
            logger.warning(f"SpectrumCache: Write error, caching disabled: {e}")
            self._enabled = False

    def purge_all(self) -> None:
        """Remove every cached matrix and index row."""
        if not self._enabled:
            return
        try:
            with self._lock:
                with sqlite3.connect(self._db_path) as conn:
                    names = [r[0] for r in conn.execute("SELECT file_name FROM superoperators")]
                    conn.execute("DELETE FROM superoperators")
                    conn.commit()
                for name in names:
                    path = os.path.join(self._dir, name)
                    if os.path.exists(path):
                        os.remove(path)
            logger.info(f"SpectrumCache: Purged {len(names)} entries.")
        except (sqlite3.Error, OSError) as e:
            logger.error(f"SpectrumCache: Failed to purge storage: {e}")

    # -------------------------------------------------------------------------
    # BUILD-THROUGH
    # -------------------------------------------------------------------------

    def superoperator(
            self,
            k: int,
            variant: str = "average",
            gates: Optional[GateSet] = None,
            j: Optional[int] = None,
    ) -> Superoperator:
        """Return the superoperator, reading it from or writing it to the cache."""
        gates = gates if gates is not None else analytic_gates()
        if k < self._min_k or not self._enabled:
            return build_superoperator(k, variant, gates, j)

        offsets = variant_offsets(k, variant, j)
        key = self.compute_composite_hash(k, variant, offsets, gates)
        matrix = self.get_entry(key)
        if matrix is not None and matrix.shape == (4 ** k, 4 ** k):
            logger.info(f"SpectrumCache: Hit for k={k} variant={variant}")
            return Superoperator(k=k, variant=variant, offsets=offsets, matrix=matrix)

        op = build_superoperator(k, variant, gates, j)
        self.set_entry(key, op)
        return op

    @staticmethod
    def compute_composite_hash(k: int, variant: str, offsets: tuple, gates: GateSet) -> str:
        """Deterministic SHA-256 over the support, variant and gate coefficients."""
        h = hashlib.sha256(f"{k}|{variant}|{offsets}|".encode("utf-8"))
        h.update(np.ascontiguousarray(gates.w, dtype=np.complex128).tobytes())
        h.update(np.ascontiguousarray(gates.u, dtype=np.complex128).tobytes())
        return h.hexdigest()
