"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``ETSKIT_PURE=1`` to force the pure kernel (used by the benchmark and by
the parity tests).  Both kernels are byte-for-byte interchangeable.
"""

from __future__ import annotations

import os

if os.environ.get("ETSKIT_PURE"):
    from etskit import _kernel as _impl
else:
    try:
        from etskit import _ckernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from etskit import _kernel as _impl

canonical_bits = _impl.canonical_bits
NODE_CAP = _impl.NODE_CAP


def backend() -> str:
    """Name of the active kernel: ``"c"`` or ``"pure"``."""
    return _impl.BACKEND
