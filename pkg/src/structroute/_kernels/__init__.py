"""Hot graph kernels with a compiled core and a pure-Python fallback.

The compiled module is used when it was built and importable. Setting the
environment variable ``STRUCTROUTE_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
reach = _pykernels.reach
simple_paths = _pykernels.simple_paths

if not os.environ.get("STRUCTROUTE_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:  # extension not built
        _ckernels = None
    else:
        BACKEND = "cython"
        reach = _ckernels.reach
        simple_paths = _ckernels.simple_paths


def backends():
    """Mapping of available backend name -> module."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels as ck
    except ImportError:
        pass
    else:
        found["cython"] = ck
    return found
