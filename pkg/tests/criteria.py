"""Timing and PASS/FAIL bookkeeping for the acceptance suite."""

from __future__ import annotations

import time
from contextlib import contextmanager

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str, limit: float):
    """Run a criterion body, enforce its time limit and record the verdict."""
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit:.0f}s"
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        RESULTS[number] = f"criterion {number:2d} FAIL  {title} ({elapsed:.2f}s): {exc}"
        print(RESULTS[number])
        raise
    RESULTS[number] = f"criterion {number:2d} PASS  {title} ({elapsed:.2f}s, limit {limit:g}s)"
    print(RESULTS[number])
