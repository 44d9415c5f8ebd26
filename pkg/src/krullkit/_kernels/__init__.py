"""Kernel selection: compiled extension when available, pure Python otherwise.

Set KRULLKIT_PURE_PYTHON=1 to force the fallback (used by the benchmark and
to debug suspected kernel issues).
"""

import os

from . import gfpoly_py

if os.environ.get("KRULLKIT_PURE_PYTHON") == "1":
    gfpoly = gfpoly_py
    BACKEND = "python"
else:
    try:
        from . import _gfpoly as gfpoly  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        gfpoly = gfpoly_py
        BACKEND = "python"

__all__ = ["gfpoly", "gfpoly_py", "BACKEND"]
