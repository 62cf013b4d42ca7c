"""Numba switch.

Hot kernels are written once in the numba-compatible subset of Python and
wrapped with :func:`kernel`.  Setting ``PCFCOLOR_DISABLE_NUMBA=1`` before
import (or running without numba installed) leaves them as plain Python
operating on numpy arrays; results are identical either way.
"""

from __future__ import annotations

import os

DISABLE_ENV = "PCFCOLOR_DISABLE_NUMBA"


def _disabled_by_env() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


try:
    if _disabled_by_env():
        raise ImportError
    import numba

    USE_NUMBA = True
except ImportError:
    numba = None
    USE_NUMBA = False


def kernel(fn):
    """``numba.njit(cache=True)`` when enabled, identity otherwise.

    The undecorated function stays reachable as ``.py_func`` in both modes so
    tests can pit the compiled and interpreted paths against each other.
    """
    if USE_NUMBA:
        return numba.njit(cache=True)(fn)
    fn.py_func = fn
    return fn


def backend() -> str:
    return "numba" if USE_NUMBA else "python"
