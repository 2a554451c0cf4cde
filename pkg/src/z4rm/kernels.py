"""Select the enumeration backend at import time.

The compiled extension is used when it was built; setting the environment
variable ``Z4RM_PURE_PYTHON=1`` forces the numpy fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
lee_distribution = _pykernels.lee_distribution

if not os.environ.get("Z4RM_PURE_PYTHON"):
    try:
        from ._kernels import lee_distribution  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass

__all__ = ["BACKEND", "lee_distribution"]
