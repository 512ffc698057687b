"""JIT switch for the hot kernels.

Kernels in :mod:`nglab.kernels` are written in the subset of Python/numpy
that numba compiles.  Setting ``NGLAB_DISABLE_JIT=1`` (or running without
numba installed) leaves them as plain Python functions operating on numpy
arrays; results are identical, only slower.
"""

import os
import warnings

_FLAG = os.environ.get("NGLAB_DISABLE_JIT", "").strip().lower()
DISABLED_BY_ENV = _FLAG in {"1", "true", "yes", "on"}

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    if not DISABLED_BY_ENV:
        warnings.warn("numba not importable; falling back to pure-Python kernels")

JIT_ENABLED = numba is not None and not DISABLED_BY_ENV


def jit(func):
    """Compile ``func`` with ``numba.njit`` unless the fallback is selected.

    The undecorated function is always reachable as ``.py_func`` so that
    benchmarks and parity tests can call both paths in one process.
    """
    if JIT_ENABLED:
        return numba.njit(cache=True)(func)
    func.py_func = func
    return func
