"""Pick the compiled kernels when available, else the pure-Python ones.

Set KHPARAM_PURE=1 to force the fallback.
"""

import os

from . import _pure

if os.environ.get("KHPARAM_PURE", "") not in ("", "0"):
    _impl = _pure
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pure
        BACKEND = "python"

resolve_circles = _impl.resolve_circles
eliminate_unit_pivots = _impl.eliminate_unit_pivots

__all__ = ["BACKEND", "resolve_circles", "eliminate_unit_pivots"]
