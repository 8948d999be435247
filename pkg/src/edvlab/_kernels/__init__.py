"""Hot kernels with a compiled backend and a pure-Python fallback.

The compiled module is used when it was built and ``EDVLAB_PURE`` is not
set to a true value.  ``BACKEND`` reports which one is active.
"""

import os

from . import _pure

_force_pure = os.environ.get("EDVLAB_PURE", "").lower() in {"1", "true", "yes"}

try:
    if _force_pure:
        raise ImportError("pure backend forced by EDVLAB_PURE")
    from . import _speedups as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pure
    BACKEND = "python"

subtree_sizes = _impl.subtree_sizes
edv_counts = _impl.edv_counts
distance_sums = _impl.distance_sums
prufer_decode = _impl.prufer_decode


def compiled():
    """Return the compiled module, or ``None`` if it is unavailable."""
    try:
        from . import _speedups
    except ImportError:
        return None
    return _speedups


__all__ = [
    "BACKEND",
    "compiled",
    "distance_sums",
    "edv_counts",
    "prufer_decode",
    "subtree_sizes",
]
