"""Backend selection for the census kernels.

The compiled extension is used when it was built; otherwise the pure-Python
backend takes over (identical results, much slower).  Set DISCDIST_PURE=1 to
force the pure backend, e.g. for benchmarking or debugging.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("DISCDIST_PURE"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

scan_all = _impl.scan_all
scan_irr = _impl.scan_irr
scan_types = _impl.scan_types

# Largest degree the kernels handle (fixed scratch buffers in the extension).
MAX_DEGREE = _pykernels.MAX_DEGREE


def backend_name() -> str:
    return BACKEND
