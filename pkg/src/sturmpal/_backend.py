"""Kernel selection: the Cython extension when built, numpy otherwise.

Set ``STURMPAL_BACKEND=python`` to force the fallback.
"""
import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

if os.environ.get("STURMPAL_BACKEND", "").lower() == "python" or _ckernels is None:
    kernels = _pykernels
else:
    kernels = _ckernels


def get(name=None):
    if name is None:
        return kernels
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
