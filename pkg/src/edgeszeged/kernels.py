"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``EDGESZEGED_PURE_PYTHON`` is set to a non-empty value,
the pure-Python kernels are used.  ``BACKEND`` names the active choice.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("EDGESZEGED_PURE_PYTHON"):
        raise ImportError("pure Python kernels requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _kernels_py

distance_matrix = _impl.distance_matrix
wiener_sum = _impl.wiener_sum
edge_partitions = _impl.edge_partitions
edge_wiener_sum = _impl.edge_wiener_sum


def canonical_labeling(n, masks):
    if _compiled is not None and n <= _compiled.MAX_CANON_N:
        return _compiled.canonical_labeling(n, masks)
    return _kernels_py.canonical_labeling(n, masks)


def compiled_module():
    """The compiled extension module, or None when it is unavailable."""
    return _compiled
