"""Backend selection for the grid-sweep kernels.

The compiled extension is used when it imports; setting
``QUATSPHERE_PURE_PYTHON=1`` forces the NumPy fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("QUATSPHERE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

reduced_grid_values = _impl.reduced_grid_values
reduced_grid_max = _impl.reduced_grid_max
sphere_grid_max = _impl.sphere_grid_max


def backend_module(name: str):
    """Explicit access to one backend, for benchmarks and parity tests."""
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels

        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
