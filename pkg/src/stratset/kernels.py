"""Backend selection for the hot monotone-map kernels.

The compiled extension ``stratset._kernels`` is used when it imports;
otherwise the pure-Python module is used. Set ``STRATSET_PURE_PYTHON=1``
to force the fallback.
"""
from __future__ import annotations

import os

_impl = None
BACKEND = "python"

if os.environ.get("STRATSET_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = None

if _impl is None:
    from . import _kernels_py as _impl  # type: ignore[no-redef]

compose = _impl.compose
is_monotone = _impl.is_monotone
repeats = _impl.repeats
ez_factor = _impl.ez_factor
word_from_surjection = _impl.word_from_surjection
surjection_from_word = _impl.surjection_from_word
delannoy_paths = _impl.delannoy_paths
collapse_pair = _impl.collapse_pair

__all__ = [
    "BACKEND",
    "compose",
    "is_monotone",
    "repeats",
    "ez_factor",
    "word_from_surjection",
    "surjection_from_word",
    "delannoy_paths",
    "collapse_pair",
]
