"""Backend selection for the search kernels.

The compiled module is used when it imported and the graph fits its
fixed-width bitsets; otherwise the pure-Python code runs.  Setting
``SEMILADDER_PURE=1`` forces the Python path.
"""

from __future__ import annotations

import os

from . import _pykernels as _py
from ._pykernels import KIND_COMATCHING, KIND_HALFGRAPH, KIND_MATCHING

try:
    if os.environ.get("SEMILADDER_PURE"):
        raise ImportError("pure backend requested")
    from . import _ckernels as _c
except ImportError:
    _c = None

BACKEND = "cython" if _c is not None else "python"

__all__ = [
    "BACKEND",
    "KIND_COMATCHING",
    "KIND_HALFGRAPH",
    "KIND_MATCHING",
    "ds_search",
    "mis_search",
    "semi_induced_search",
]


def _compiled(n: int):
    if _c is not None and n <= _c.MAX_VERTICES:
        return _c
    return _py


def mis_search(adj, cand: int, floor: int, stop_at: int, budget: int):
    return _compiled(len(adj)).mis_search(list(adj), cand, floor, stop_at, budget)


def ds_search(closed, universe: int, allowed: int, limit: int, budget: int):
    return _compiled(len(closed)).ds_search(list(closed), universe, allowed, limit, budget)


def semi_induced_search(adj, n: int, kind: int, h: int):
    return _compiled(n).semi_induced_search(list(adj), n, kind, h)
