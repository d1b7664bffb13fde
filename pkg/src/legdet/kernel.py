"""Kernel selection: the compiled elimination core when available, else pure Python.

Set LEGDET_PURE=1 to force the fallback (used by the benchmark and tests).
"""

from __future__ import annotations

import os

from . import _pure

KIND_LINEAR = _pure.KIND_LINEAR
KIND_QUAD = _pure.KIND_QUAD
KIND_QUADFORM = _pure.KIND_QUADFORM

if os.environ.get("LEGDET_PURE") == "1":
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

det_mod_prime = _impl.det_mod_prime
build_symbol_entries = _impl.build_symbol_entries
