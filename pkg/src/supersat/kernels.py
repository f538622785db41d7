"""Kernel dispatch: the compiled extension when it imports, otherwise pure Python.

Set ``SUPERSAT_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("SUPERSAT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND_NAME = "cython" if compiled_backend is not None and backend is compiled_backend else "python"

count_disjoint_pairs = backend.count_disjoint_pairs
count_cross_disjoint = backend.count_cross_disjoint
zeta_disjoint_pairs = backend.zeta_disjoint_pairs
subset_edge_counts = backend.subset_edge_counts
min_edges_search = backend.min_edges_search
count_matching_free = backend.count_matching_free

__all__ = [
    "BACKEND_NAME",
    "backend",
    "compiled_backend",
    "python_backend",
    "count_disjoint_pairs",
    "count_cross_disjoint",
    "zeta_disjoint_pairs",
    "subset_edge_counts",
    "min_edges_search",
    "count_matching_free",
]
