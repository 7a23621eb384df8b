"""Backend selection for the hot kernels.

The compiled Cython module is used when it imports; otherwise the numpy
fallback.  ``DIRICHLET_BACKEND=python`` forces the fallback.
``DIRICHLET_THREADS`` caps the worker threads used by :func:`local_norms`.
"""

import importlib
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _core_py


def load_backend(name):
    """Return the kernel module for ``name`` ('cython' or 'python')."""
    if name == "python":
        return _core_py
    if name == "cython":
        return importlib.import_module("dirichlet_approx._core")
    raise ValueError(f"unknown backend {name!r}")


def _select():
    if os.environ.get("DIRICHLET_BACKEND", "").lower() == "python":
        return "python", _core_py
    try:
        return "cython", load_backend("cython")
    except ImportError:
        return "python", _core_py


BACKEND, core = _select()

_MIN_CHUNK = 2048


def thread_count():
    raw = os.environ.get("DIRICHLET_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"DIRICHLET_THREADS must be an integer, got {raw!r}") from None
    return max(1, n)


def local_norms(coeffs, zetas, threads=None):
    """D_zeta(f) at every point of ``zetas``; chunks run on a thread pool.

    Each output entry depends only on its own zeta, so the result is the
    same for any thread count.
    """
    zetas = np.ascontiguousarray(zetas, dtype=np.complex128).ravel()
    threads = thread_count() if threads is None else max(1, int(threads))
    if threads == 1 or zetas.shape[0] < 2 * _MIN_CHUNK:
        return core.local_norms(coeffs, zetas)
    chunks = np.array_split(zetas, min(threads * 4, zetas.shape[0] // _MIN_CHUNK))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda z: core.local_norms(coeffs, z), chunks))
    return np.concatenate(parts)
