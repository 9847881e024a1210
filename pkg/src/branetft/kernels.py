"""Kernel selection: compiled extension when importable, numpy fallback otherwise.

Set ``BRANETFT_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
local_codes = _kernels_py.local_codes
conj_canon = _kernels_py.conj_canon

if os.environ.get("BRANETFT_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        pass
    else:
        BACKEND = "cython"
        local_codes = _ckernels.local_codes
        conj_canon = _ckernels.conj_canon


def backends() -> dict:
    """Every importable backend by name, for benchmarks and parity tests."""
    out = {"python": _kernels_py}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
