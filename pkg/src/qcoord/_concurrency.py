"""Optional thread fan-out for the verification suites.

All engine values are immutable and every check is a pure function, so the
suites can evaluate their cases concurrently.  ``QCOORD_THREADS`` caps the
worker count; the default of 1 keeps everything sequential.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_count() -> int:
    raw = os.environ.get("QCOORD_THREADS", "1")
    try:
        count = int(raw)
    except ValueError:
        raise ValueError(f"QCOORD_THREADS must be an integer, got {raw!r}")
    return max(count, 1)


def map_cases(fn, items):
    """Apply ``fn`` over ``items`` preserving order, threading when allowed."""
    items = list(items)
    workers = thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
