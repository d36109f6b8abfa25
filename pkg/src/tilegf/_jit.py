"""Numba switch.

Kernels are decorated with :func:`njit` from here. Setting
``TILEGF_DISABLE_NUMBA=1`` (or running without numba installed) turns the
decorator into a no-op, so the same source runs as plain Python/numpy.
"""

import os

_DISABLED = os.environ.get("TILEGF_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _DISABLED:
        raise ImportError
    import numba as _numba
except ImportError:
    _numba = None

NUMBA_ENABLED = _numba is not None


def njit(*args, **kwargs):
    if _numba is not None:
        kwargs.setdefault("cache", True)
        return _numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


def py_func(f):
    """Underlying Python function of a kernel, JIT-compiled or not."""
    return getattr(f, "py_func", f)
