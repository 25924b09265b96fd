"""Select the determinant kernel backend at import time.

The compiled Cython kernel is preferred when its extension module built;
otherwise the pure-Python twin takes over transparently. Set
``HANKEL_APPROX_PURE=1`` to force the pure backend (used by the benchmark
and by tests that compare the two).
"""

from __future__ import annotations

import os

from . import _bareiss_py

_FORCE_PURE = os.environ.get("HANKEL_APPROX_PURE", "") not in ("", "0")

try:
    from . import _bareiss as _compiled
except ImportError:
    _compiled = None

if _compiled is not None and not _FORCE_PURE:
    bareiss_det = _compiled.bareiss_det
    BACKEND = "compiled"
else:
    bareiss_det = _bareiss_py.bareiss_det
    BACKEND = "pure"


def available_backends() -> dict:
    """Name -> kernel function for every backend importable right now."""
    backends = {"pure": _bareiss_py.bareiss_det}
    if _compiled is not None:
        backends["compiled"] = _compiled.bareiss_det
    return backends
