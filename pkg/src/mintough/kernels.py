"""Backend selection for the bitmask kernels.

The compiled ``_core`` extension is used when it imports and the graph fits
in 64 bits; otherwise the pure-Python ``_pycore`` twin runs.  Setting
``MINTOUGH_PURE_PYTHON=1`` forces the fallback for the whole process.
"""
from __future__ import annotations

import os
from types import ModuleType

from mintough import _pycore

_compiled: ModuleType | None
if os.environ.get("MINTOUGH_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from mintough import _core as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
default: ModuleType = _compiled if _compiled is not None else _pycore
pure: ModuleType = _pycore
compiled: ModuleType | None = _compiled


def for_size(n: int) -> ModuleType:
    """Kernel module able to handle an ``n``-vertex graph."""
    if _compiled is not None and n <= 64:
        return _compiled
    return _pycore
