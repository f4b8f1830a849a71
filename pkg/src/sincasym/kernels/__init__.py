"""Quadrature kernel backend selection.

The compiled Cython extension is preferred when it imported cleanly; the
pure-Python double-double implementation is a drop-in fallback.  Set
SINCASYM_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the backend-parity tests).
"""

from __future__ import annotations

import os

from . import pykernels

if os.environ.get("SINCASYM_PURE_PYTHON"):
    _impl = pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        _impl = pykernels
        BACKEND = "python"

sin_dd = _impl.sin_dd
cos_dd = _impl.cos_dd
sinc_dd = _impl.sinc_dd
sigma_dd = _impl.sigma_dd
panel_sinc_pow = _impl.panel_sinc_pow
panel_kn = _impl.panel_kn
panel_khat = _impl.panel_khat
panel_ball = _impl.panel_ball
panel_ball_pow = _impl.panel_ball_pow
