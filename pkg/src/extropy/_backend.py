"""Backend selection for the KDE kernels.

Prefers the compiled extension; falls back to the NumPy implementation when
the extension is missing.  Set ``EXTROPY_PURE_PYTHON=1`` to force the
fallback (useful for benchmarking and debugging).
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("EXTROPY_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

pdf_points = _impl.pdf_points
mass = _impl.mass
square_integral = _impl.square_integral


def active_backend() -> str:
    """Name of the kernel backend in use: ``"compiled"`` or ``"python"``."""
    return _impl.BACKEND_NAME
