"""Kernel backend selection: compiled extension when built, pure Python otherwise.

Set BESSELNU_PURE_PYTHON=1 to force the fallback (used by the benchmark and by
backend-parity tests).
"""

import os

if os.environ.get("BESSELNU_PURE_PYTHON"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

q_weighted_series = _impl.q_weighted_series
harmonic_weighted_series = _impl.harmonic_weighted_series
