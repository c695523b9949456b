"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Setting ``BPAPROB_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("BPAPROB_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "compiled" if compiled_backend is not None else "python"

entropy_nats = backend.entropy_nats
waterfill = backend.waterfill
min_entropy_vertex = backend.min_entropy_vertex
grid_search = backend.grid_search
segment_bisect = backend.segment_bisect

__all__ = [
    "BACKEND",
    "backend",
    "compiled_backend",
    "python_backend",
    "entropy_nats",
    "waterfill",
    "min_entropy_vertex",
    "grid_search",
    "segment_bisect",
]
