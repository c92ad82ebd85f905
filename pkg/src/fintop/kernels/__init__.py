"""Kernel backend selection.

The enumeration and census inner loops are numba-jitted by default.  Set
``FINTOP_DISABLE_NUMBA=1`` to force the pure-Python reference kernels
(identical results, much slower at n >= 6); the same happens automatically
when numba is unavailable.  ``benchmarks/bench_kernels.py`` compares the two.
"""

import os

if os.environ.get("FINTOP_DISABLE_NUMBA") == "1":
    from .pure import BACKEND, preorder_matrices, signature_counts, signature_of_rows
else:
    try:
        from .jit import BACKEND, preorder_matrices, signature_counts, signature_of_rows
    except ImportError:
        from .pure import BACKEND, preorder_matrices, signature_counts, signature_of_rows

__all__ = ["BACKEND", "preorder_matrices", "signature_counts", "signature_of_rows"]
