"""Kernel backend selection: compiled extension if available, numpy otherwise.

GPDIM_PURE_PYTHON=1 forces the numpy fallback regardless of what is built.
Both backends are exposed through get_backend() so tests and the benchmark
can compare them directly.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("GPDIM_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

bfs_all_pairs = _impl.bfs_all_pairs
scan_resolving = _impl.scan_resolving
pack_bits = _kernels_py.pack_bits


def get_backend(name: str):
    """Return the kernel module for "compiled" or "python", or raise."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from . import _speedups  # raises ImportError when not built

        return _speedups
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends() -> list[str]:
    names = ["python"]
    try:
        get_backend("compiled")
        names.insert(0, "compiled")
    except ImportError:
        pass
    return names
