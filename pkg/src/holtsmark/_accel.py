"""Optional numba acceleration for the scalar series kernels.

Set ``HOLTSMARK_NO_NUMBA=1`` to run the kernels as plain Python/numpy
code.  The flag is read once, at import time.
"""

import os

_DISABLED = os.environ.get("HOLTSMARK_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("numba disabled by HOLTSMARK_NO_NUMBA")
    import numba
except ImportError:
    numba = None

NUMBA_ENABLED = numba is not None


def jit(func):
    """Compile ``func`` with ``numba.njit`` when available, else return it unchanged."""
    if numba is None:
        return func
    # fastmath must stay off: contraction into FMA breaks the error-free transforms
    return numba.njit(cache=True, fastmath=False, nogil=True)(func)
