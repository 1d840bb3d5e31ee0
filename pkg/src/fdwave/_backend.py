"""Numba/NumPy backend selection.

Hot kernels are compiled with numba when it is importable and the environment
variable FDWAVE_NO_NUMBA is unset (or "0"); otherwise the pure-NumPy fallback
implementations are used.  The flag is read once at import time.
"""
import os

__all__ = ["HAS_NUMBA", "jit"]


def _passthrough(*args, **kwargs):
    # works both as @jit and @jit(...)
    if args and callable(args[0]):
        return args[0]

    def wrap(fn):
        return fn

    return wrap


_disabled = os.environ.get("FDWAVE_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")

HAS_NUMBA = False
if not _disabled:
    try:
        from numba import njit as _njit

        HAS_NUMBA = True
    except ImportError:
        HAS_NUMBA = False

if HAS_NUMBA:

    def jit(**opts):
        opts.setdefault("cache", True)
        return _njit(**opts)

else:
    jit = _passthrough
