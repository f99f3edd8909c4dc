"""Select the kernel backend at import time.

``GEODEX_BACKEND=python`` forces the pure-Python kernels;
``GEODEX_BACKEND=compiled`` makes a missing extension an error.  The
compiled kernels use 64-bit rows, so larger digraphs always go to Python.
"""

from __future__ import annotations

import os

from . import _pykernels as py

_choice = os.environ.get("GEODEX_BACKEND", "auto").lower()
if _choice not in ("auto", "python", "compiled"):
    raise ImportError(f"GEODEX_BACKEND must be auto, python or compiled, not {_choice!r}")

compiled = None
if _choice != "python":
    try:
        from . import _ckernels as compiled
    except ImportError:
        if _choice == "compiled":
            raise
        compiled = None

BACKEND = compiled.BACKEND if compiled is not None else py.BACKEND


def kernels_for(n: int):
    """Kernel module to use for a digraph of order ``n``."""
    if compiled is not None and n <= compiled.MAX_N:
        return compiled
    return py


def geodetic_ok(rows, n, k):
    return kernels_for(n).geodetic_ok(rows, n, k)


def canonical_labeling(rows, n):
    return kernels_for(n).canonical_labeling(rows, n)


def is_strong(rows, cols, n):
    return kernels_for(n).is_strong(rows, cols, n)
