"""Hot kernels with import-time backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python ``_pykernels`` module.  Setting ``HERMINT_PURE_PYTHON=1``
forces the fallback.
"""
import os

from . import _pykernels

try:
    if os.environ.get("HERMINT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-python backend forced")
    from . import _ckernels as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

poly_mul = _impl.poly_mul
gauss_numerator = _impl.gauss_numerator
h4_value = _impl.h4_value


def available_backends():
    """Map backend name to kernel module for every importable backend."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
