from __future__ import annotations

"""
Sweep Parallelism.

Thread-pool mapping used by every embarrassingly parallel sweep (pair
coordinates, noise samples, gauges, correlator distances). NumPy releases
the GIL inside contractions, so threads scale without pickling networks.
Results are returned in input order, which keeps outputs independent of
the worker count.
"""

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(threads: int) -> int:
    """Map the ``threads`` setting (0 = automatic) onto a worker count."""
    if threads > 0:
        return threads
    return max(1, min(8, os.cpu_count() or 1))


def parallel_map(
        fn: Callable[[T], R],
        items: Sequence[T],
        *,
        threads: int = 0,
        label: str = "Sweep",
) -> List[R]:
    """
    Apply ``fn`` to every item, preserving order.

    Args:
        fn: Pure function of one item.
        items: Work items.
        threads: Worker count (0 = automatic, 1 = run inline).
        label: Thread name prefix, visible in the run log.

    Returns:
        List[R]: ``[fn(x) for x in items]``.
    """
    workers = min(resolve_workers(threads), max(1, len(items)))
    if workers == 1:
        return [fn(x) for x in items]

    logger.debug(f"{label}: {len(items)} tasks on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix=label) as executor:
        return list(executor.map(fn, items))
