"""Sweep backend selection: compiled kernel when available, else pure Python.

Set ``NMTRI_BACKEND=py`` or ``NMTRI_BACKEND=cy`` to force one side (useful
for the backend benchmark and for cross-checking).
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernel_py


def _load_cython() -> ModuleType:
    from . import _kernel_cy  # type: ignore[attr-defined]
    return _kernel_cy


_forced = os.environ.get("NMTRI_BACKEND", "").strip().lower()
if _forced in ("py", "python"):
    kernel: ModuleType = _kernel_py
    BACKEND = "python"
elif _forced in ("cy", "cython", "c"):
    kernel = _load_cython()
    BACKEND = "cython"
elif _forced in ("", "auto"):
    try:
        kernel = _load_cython()
        BACKEND = "cython"
    except ImportError:
        kernel = _kernel_py
        BACKEND = "python"
else:
    raise RuntimeError(f"unknown NMTRI_BACKEND value {_forced!r}")


def get_kernel(backend: str | None = None) -> ModuleType:
    """Kernel module for an explicit backend name, or the selected default."""
    if backend is None:
        return kernel
    if backend in ("py", "python"):
        return _kernel_py
    if backend in ("cy", "cython", "c"):
        return _load_cython()
    raise ValueError(f"unknown backend {backend!r}")
