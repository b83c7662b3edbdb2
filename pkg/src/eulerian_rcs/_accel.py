"""Optional numba acceleration.

Set ``EULERIAN_RCS_DISABLE_NUMBA=1`` to force the pure-numpy code paths.
When numba is missing the numpy paths are used automatically.
"""
import os

_DISABLED = os.environ.get("EULERIAN_RCS_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError("disabled by environment")
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise an identity decorator."""
    if HAVE_NUMBA:
        return _njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def identity(func):
        return func

    return identity
