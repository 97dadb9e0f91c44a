"""Backend selection for the hot numeric kernels.

Two implementations of every kernel exist: a pure-numpy one and a
numba-compiled one.  The active set is chosen once at import from the
``HURZETA_BACKEND`` environment variable:

``auto``   (default) use numba when it imports cleanly, else numpy
``numba``  require numba; raise if it is unavailable
``numpy``  force the pure-numpy path even when numba is installed

The choice is exposed via :func:`active_backend` so reports and
benchmarks can record which path produced their numbers.
"""

import os

__all__ = ["NUMBA_AVAILABLE", "active_backend", "using_numba", "njit"]

_MODE = os.environ.get("HURZETA_BACKEND", "auto").strip().lower()
if _MODE not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"HURZETA_BACKEND must be one of auto|numba|numpy, got {_MODE!r}"
    )

if _MODE == "numpy":
    NUMBA_AVAILABLE = False
    njit = None
else:
    try:
        from numba import njit

        NUMBA_AVAILABLE = True
    except ImportError:
        if _MODE == "numba":
            raise ImportError(
                "HURZETA_BACKEND=numba but numba is not importable"
            )
        NUMBA_AVAILABLE = False
        njit = None

_ACTIVE = "numba" if NUMBA_AVAILABLE else "numpy"


def active_backend() -> str:
    """Name of the kernel set in use: ``"numba"`` or ``"numpy"``."""
    return _ACTIVE


def using_numba() -> bool:
    return NUMBA_AVAILABLE
