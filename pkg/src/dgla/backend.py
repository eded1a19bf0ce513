"""Select the kernel backend: compiled extension if importable, else pure python.

Set DGLA_PURE_PYTHON=1 in the environment to force the fallback even when the
compiled module is installed (used by the benchmark and the equivalence tests).
"""

import os

from . import _kernels as _py

if os.environ.get("DGLA_PURE_PYTHON") == "1":
    _impl = _py
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _py

bracket_convolve = _impl.bracket_convolve
matvec_terms = _impl.matvec_terms


def kernel_backend():
    """Name of the active backend: "compiled" or "python"."""
    return "python" if _impl is _py else "compiled"
