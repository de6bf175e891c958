"""Numba toggle for the hot kernels.

Set ``TRIFRUST_NO_NUMBA=1`` (or ``true``/``yes``) before import to force the
pure-numpy fallback path; the same flag is what ``benchmarks/bench_kernels.py``
flips to compare the two. Missing numba degrades to the fallback silently.
"""

import os


def _flag_disabled() -> bool:
    return os.environ.get("TRIFRUST_NO_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED: bool = not _flag_disabled() and _numba_available()


def maybe_njit(func):
    """Apply ``numba.njit(cache=True)`` when acceleration is enabled."""
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True)(func)
    return func
