"""Kernel backend selection.

The compiled extension cliffk._kernel is used when it importable, unless the
environment variable CLIFFK_PURE is set to a non-empty value other than "0",
in which case the pure-Python kernels are forced.  Both expose an identical
API and produce identical results; see tests/test_kernels.py.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("CLIFFK_PURE", "0") not in ("", "0"):
    kernel = _kernel_py
else:
    try:
        from . import _kernel as kernel  # type: ignore[no-redef]
    except ImportError:
        kernel = _kernel_py

BACKEND = kernel.IMPLEMENTATION


def available_backends() -> list[str]:
    names = ["pure"]
    try:
        from . import _kernel  # noqa: F401
    except ImportError:
        pass
    else:
        names.append("compiled")
    return names


def get_kernel(name: str | None = None):
    """Fetch a kernel module by name ("pure" or "compiled"), or the default."""
    if name is None:
        return kernel
    if name == "pure":
        return _kernel_py
    if name == "compiled":
        from . import _kernel

        return _kernel
    raise ValueError(f"unknown kernel backend: {name!r}")
