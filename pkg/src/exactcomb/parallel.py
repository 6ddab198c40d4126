"""Worker-pool plumbing.

Verification functions accept a map-like callable; this module builds one.
Modules stay policy-free: they never decide worker counts themselves.
"""

from __future__ import annotations

import os
from multiprocessing import get_context

WORKERS_ENV = "EXACTCOMB_WORKERS"


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError as exc:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from exc


def parallel_map(fn, items, workers: int | None = None) -> list:
    """Order-preserving map, fanned out over processes when workers > 1.

    The callable and every item must be picklable; with one worker this is
    a plain list(map(...)) with no pool overhead.
    """
    items = list(items)
    if workers is None:
        workers = default_workers()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    procs = min(workers, len(items))
    chunk = max(1, len(items) // (procs * 4))
    with get_context().Pool(processes=procs) as pool:
        return pool.map(fn, items, chunksize=chunk)


def make_pmap(workers: int | None = None):
    """A capability to hand to verify_* functions as their pmap argument."""
    if workers is None:
        workers = default_workers()
    if workers <= 1:
        return map

    def pmap(fn, items):
        return parallel_map(fn, items, workers=workers)

    return pmap
