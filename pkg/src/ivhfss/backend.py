"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the pure-Python
module is the fallback and the reference.  Set ``IVHFSS_PURE_PYTHON=1`` to
force the fallback (used by the benchmark and the backend-equivalence tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("IVHFSS_PURE_PYTHON") == "1":
    kernels = _kernels_py
else:
    try:
        from . import _ckernels as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _kernels_py

BACKEND_NAME: str = kernels.BACKEND
