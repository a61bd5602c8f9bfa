"""Backend selection for the elimination kernels.

The compiled extension is used when it imports; set ``COTSTRUCT_PURE=1`` to
force the numpy fallback.
"""
from __future__ import annotations

import os

from cotstruct import _pure

BACKEND = "pure"
echelon_modp = _pure.echelon_modp
echelon_object = _pure.echelon_object

if os.environ.get("COTSTRUCT_PURE", "") not in ("1", "true", "yes"):
    try:
        from cotstruct import _core
    except ImportError:
        pass
    else:
        echelon_modp = _core.echelon_modp
        BACKEND = "compiled"
