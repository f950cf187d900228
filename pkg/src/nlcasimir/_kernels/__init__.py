"""Backend selection for the hot evaluation kernels.

The compiled Cython extension is preferred when importable; the numpy
reference implementation is the fallback.  Setting the environment
variable NLCASIMIR_PURE to a non-empty value forces the fallback, which
is how the two backends are compared in tests and benchmarks.
"""
import os

from . import pure
from .pure import (
    C_LIGHT,
    FEIBELMAN_CONST,
    FEIBELMAN_HYDRO,
    HYDRODYNAMIC,
    LOCAL,
    PERFECT,
)

if os.environ.get("NLCASIMIR_PURE"):
    _impl = pure
    BACKEND = "pure"
else:
    try:
        from . import _fast as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = pure
        BACKEND = "pure"

reflection_s_p = _impl.reflection_s_p
force_q_integrand = _impl.force_q_integrand

__all__ = [
    "BACKEND",
    "C_LIGHT",
    "PERFECT",
    "LOCAL",
    "HYDRODYNAMIC",
    "FEIBELMAN_CONST",
    "FEIBELMAN_HYDRO",
    "reflection_s_p",
    "force_q_integrand",
    "pure",
]
