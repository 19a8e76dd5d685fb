"""Kernel selection: the compiled extension when importable, numpy otherwise.

Set CIRCSPEC_PURE_PYTHON=1 to force the fallback.
"""
from __future__ import annotations

import os

from . import _fallback

BACKEND = "python"
if os.environ.get("CIRCSPEC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:  # extension not built
        _impl = _fallback
else:
    _impl = _fallback

jacobi_eigenvalues = _impl.jacobi_eigenvalues
prime_distinct_counts = _impl.prime_distinct_counts
gray_realizable = _impl.gray_realizable
