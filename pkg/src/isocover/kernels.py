"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
twin in ``_pykernels``.  Set ``ISOCOVER_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("ISOCOVER_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled_backend
    except ImportError:  # extension not built
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend

BACKEND = _active.BACKEND
treewidth_dp = _active.treewidth_dp
vertex_separation_dp = _active.vertex_separation_dp
treedepth_dp = _active.treedepth_dp
bfs_many = _active.bfs_many


def available_backends():
    backends = {"python": python_backend}
    if compiled_backend is not None:
        backends["cython"] = compiled_backend
    return backends
