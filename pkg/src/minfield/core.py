"""Kernel backend selection.

The compiled Cython kernels are used when the extension built; setting
MINFIELD_PURE=1 in the environment forces the pure-Python fallback
(used by the benchmark and the backend-agreement tests).
"""

from __future__ import annotations

import os

if os.environ.get("MINFIELD_PURE"):
    from . import _core_py as impl
    BACKEND = "python"
else:
    try:
        from . import _core as impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        from . import _core_py as impl
        BACKEND = "python"

mat_mul = impl.mat_mul
rref = impl.rref
