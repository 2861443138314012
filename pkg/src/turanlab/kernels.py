"""Kernel backend selection.

The compiled extension is preferred when importable; set TURANLAB_PURE=1 to
force the pure-Python fallback. The two backends implement the same API and
must agree byte for byte; `load_backend` exposes both for benchmarks and
equivalence tests. Canonical forms route to the pure backend above the
compiled word width.
"""

from __future__ import annotations

import os

from turanlab import _pykernels

_COMPILED = None
if not os.environ.get("TURANLAB_PURE"):
    try:
        from turanlab import _fastkernels as _COMPILED
    except ImportError:
        _COMPILED = None

_impl = _COMPILED if _COMPILED is not None else _pykernels

BACKEND = _impl.BACKEND
CYCLE = _pykernels.CYCLE
KST = _pykernels.KST

count_triangles = _impl.count_triangles
max_codegree_nonadjacent = _impl.max_codegree_nonadjacent
find_kst = _impl.find_kst
find_cycle = _impl.find_cycle
has_path_on = _impl.has_path_on
violated_pattern = _impl.violated_pattern
extend_free_level = _impl.extend_free_level
bb_search = _impl.bb_search
pack_key = _pykernels.pack_key
unpack_key = _pykernels.unpack_key

_CANON_WORD_CAP = 64


def canon_key(rows, n):
    if _impl is not _pykernels and n > _CANON_WORD_CAP:
        return _pykernels.canon_key(rows, n)
    return _impl.canon_key(rows, n)


def load_backend(name: str):
    """Return the named backend module ('pure' or 'compiled'), or None."""
    if name == "pure":
        return _pykernels
    if name == "compiled":
        return _COMPILED
    raise ValueError(f"unknown backend {name!r}")
