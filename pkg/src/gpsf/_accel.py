"""Kernel acceleration switch.

The hot numeric kernels in :mod:`gpsf.kernels` exist in two versions: a
numba-compiled loop version and a vectorized pure-numpy version.  The
compiled path is used when numba imports cleanly and the environment
variable ``GPSF_PURE_NUMPY`` is unset; setting ``GPSF_PURE_NUMPY=1``
(checked once, at import) forces the numpy path.
"""

import os

_FORCE_NUMPY = os.environ.get("GPSF_PURE_NUMPY", "").strip().lower() in (
    "1", "true", "yes", "on",
)

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not _FORCE_NUMPY


def jit(func):
    """Compile ``func`` with numba when the compiled path is active."""
    if USE_NUMBA:
        return njit(cache=True, fastmath=False)(func)
    return func
