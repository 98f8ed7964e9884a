"""Kernel selection: the compiled extension when importable, else the pure-Python twin.

Set ``EOGRAPH_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("EOGRAPH_PURE_PYTHON"):
    from . import _kernels_py as kernels

    COMPILED = False
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:
        from . import _kernels_py as kernels

        COMPILED = False

__all__ = ["kernels", "COMPILED"]
