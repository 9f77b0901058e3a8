"""Kernel selection.

The compiled Cython kernels are used when importable; setting
``NODALJAC_PURE=1`` (or calling :func:`use`) forces the pure-Python ones.
"""

import os

from . import _purekernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

AVAILABLE = {"pure": _purekernels}
if _ckernels is not None:
    AVAILABLE["compiled"] = _ckernels

if _ckernels is not None and not os.environ.get("NODALJAC_PURE"):
    kernels = _ckernels
    name = "compiled"
else:
    kernels = _purekernels
    name = "pure"


def use(backend: str) -> None:
    """Switch every polynomial operation to ``backend`` ("compiled" or "pure")."""
    global kernels, name
    try:
        kernels = AVAILABLE[backend]
    except KeyError:
        raise ValueError(f"kernel backend {backend!r} is not available") from None
    name = backend
