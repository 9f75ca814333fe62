"""Backend selection for the tuple-enumeration kernel.

The compiled extension is used when it imports; set ``CODEPOLY_BACKEND=python``
to force the pure-Python path.
"""

from __future__ import annotations

import os
from typing import Optional, Sequence

from . import _pykernels

try:
    if os.environ.get("CODEPOLY_BACKEND", "").lower() == "python":
        raise ImportError("pure-Python backend requested")
    from . import _kernels as _ext
except ImportError:
    _ext = None

BACKEND = "cython" if _ext is not None else "python"

# column codes must fit comfortably in int64
_INT64_LIMIT = 2**62


def available_backends() -> list[str]:
    return ["cython", "python"] if _ext is not None else ["python"]


def column_profiles(words: Sequence[Sequence[int]], g: int, q: int,
                    ref: Optional[Sequence[int]] = None,
                    backend: Optional[str] = None) -> dict[tuple[int, ...], int]:
    backend = backend or BACKEND
    if backend == "cython":
        if _ext is None:
            raise RuntimeError("compiled kernel is not built")
        if q ** (g + 1) < _INT64_LIMIT and g >= 1:
            return _ext.column_profiles(words, g, q, ref)
    elif backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _pykernels.column_profiles(words, g, q, ref)
