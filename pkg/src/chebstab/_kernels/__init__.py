"""Kernel backend selection.

The compiled extension `_native` carries the hot inner loops; `_pure` is a
numpy implementation of the same surface.  The compiled module is preferred
when importable.  Set CHEBSTAB_BACKEND=pure (or =native) to force a choice,
e.g. for benchmarking.
"""

import os

_forced = os.environ.get("CHEBSTAB_BACKEND", "").strip().lower()

if _forced == "pure":
    from . import _pure as impl
elif _forced == "native":
    from . import _native as impl  # raises ImportError if not built
else:
    try:
        from . import _native as impl
    except ImportError:
        from . import _pure as impl

BACKEND = impl.BACKEND_NAME

LINF = 0
L2 = 1
