"""Selects the table-kernel backend at import time.

The compiled extension is used when it is importable; otherwise the
pure-Python twin takes over.  Set ELEMSYM_PURE=1 to force the fallback.
Callers go through this module's ``kernels`` attribute so the choice can
be overridden (e.g. in tests or benchmarks).
"""

import os

from elemsym import _kernels_py

if os.environ.get("ELEMSYM_PURE") == "1":
    kernels = _kernels_py
    COMPILED = False
else:
    try:
        from elemsym import _kernels as _ext

        kernels = _ext
        COMPILED = True
    except ImportError:
        kernels = _kernels_py
        COMPILED = False
