"""Backend selection for the hot search kernels.

The compiled extension (``permdek._core._speedups``, built from Cython)
is used when it imports cleanly; otherwise the pure-Python twin takes
over.  Set ``PERMDEK_PURE=1`` to force the fallback, e.g. when
benchmarking or bisecting a discrepancy.  ``BACKEND`` names the backend
actually selected.
"""
from __future__ import annotations

import os

from . import pure

if os.environ.get("PERMDEK_PURE"):
    _backend = pure
else:
    try:
        from . import _speedups as _backend  # type: ignore[no-redef]
    except ImportError:
        _backend = pure

BACKEND: str = _backend.BACKEND_NAME

config_obtainable = _backend.config_obtainable
dek_winnable = _backend.dek_winnable

__all__ = ["BACKEND", "config_obtainable", "dek_winnable", "pure"]
