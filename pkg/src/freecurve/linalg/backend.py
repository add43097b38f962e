"""Selects the compiled kernels, falling back to pure Python.

Set FREECURVE_PURE=1 to force the fallback (used by the benchmark and by the
tests that compare both paths).
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

COMPILED_AVAILABLE = _compiled is not None


def kernels(pure: bool | None = None):
    if pure is None:
        pure = os.environ.get("FREECURVE_PURE", "") not in ("", "0")
    if pure or _compiled is None:
        return _kernels_py
    return _compiled


def backend_name(pure: bool | None = None) -> str:
    return "python" if kernels(pure) is _kernels_py else "compiled"
