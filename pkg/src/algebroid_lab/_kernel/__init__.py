"""Kernel backend selection.

Prefers the compiled Cython kernel when it was built; falls back to the
pure-Python twin.  ALGEBROID_LAB_PURE=1 forces the pure path (used by the
benchmark and by tests that compare backends).
"""

import os

if os.environ.get("ALGEBROID_LAB_PURE") == "1":
    from . import _poly_py as _impl
else:
    try:
        from . import _poly_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _poly_py as _impl

BACKEND = _impl.BACKEND
terms_add = _impl.terms_add
terms_sub = _impl.terms_sub
terms_neg = _impl.terms_neg
terms_scale = _impl.terms_scale
terms_mul = _impl.terms_mul
axpy = _impl.axpy
vaxpy = _impl.vaxpy

__all__ = [
    "BACKEND",
    "terms_add",
    "terms_sub",
    "terms_neg",
    "terms_scale",
    "terms_mul",
    "axpy",
    "vaxpy",
]
