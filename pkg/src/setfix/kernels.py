"""Kernel selection: compiled extension if present, pure Python otherwise.

Set SETFIX_PURE_PYTHON=1 to force the fallback (used by the equivalence
tests and the benchmark).
"""

import os

if os.environ.get("SETFIX_PURE_PYTHON"):
    from . import _purekern as _impl
else:
    try:
        from . import _fastkern as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _purekern as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION

point_set_matrix = _impl.point_set_matrix
hausdorff_matrix = _impl.hausdorff_matrix
point_set_euclidean = _impl.point_set_euclidean
hausdorff_euclidean = _impl.hausdorff_euclidean
