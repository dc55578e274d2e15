"""Kernel selection: the compiled ``_kernels`` extension when built, else the numpy fallback.

Set ``DELAYTIMES_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
if os.environ.get("DELAYTIMES_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None
    if _compiled is not None:
        BACKEND = "cython"

_impl = _compiled if BACKEND == "cython" else _kernels_py

jacobi_eigvals_batch = _impl.jacobi_eigvals_batch
pk_step = _impl.pk_step


def get_backend(name: str):
    """Kernel module by name (``"cython"`` or ``"python"``); used by tests and benchmarks."""
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend {name!r}")
