"""Kernel selection: compiled extension when importable, else the Python twin.

Set ``ARDLBOUNDS_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("ARDLBOUNDS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

betainc = _impl.betainc
gammainc = _impl.gammainc
gammaincc = _impl.gammaincc
householder_qr = _impl.householder_qr
solve_upper = _impl.solve_upper
upper_inverse = _impl.upper_inverse

__all__ = [
    "BACKEND",
    "betainc",
    "gammainc",
    "gammaincc",
    "householder_qr",
    "solve_upper",
    "upper_inverse",
]
