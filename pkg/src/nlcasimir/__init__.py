"""Zero-temperature Casimir forces between planar mirrors with spatially
dispersive (non-local) dielectric response models."""

from ._kernels import BACKEND
from .dielectric import (
    ComplexFrequency,
    ExcitonicParams,
    MaterialParams,
    drude_transverse,
    excitonic_lorentz,
    hydrodynamic_longitudinal,
    lindhard_longitudinal,
    load_material,
)
from .errors import (
    ConfigError,
    DomainError,
    IllConditionedError,
    IntegrandError,
    ModelError,
    NlCasimirError,
    QuadratureError,
)
from .lifshitz import (
    DperpTable,
    ForceCurve,
    ForcePoint,
    MirrorModel,
    casimir_pressure,
    feibelman_vs_exact_curve,
    nonlocal_correction_curve,
)
from .numerics import (
    QuadratureConfig,
    QuadResult,
    integrate_adaptive,
    integrate_half_line,
    log_grid,
)
from .surface import (
    Channel,
    Impedances,
    NormalWavevectors,
    centroid_dperp,
    feibelman_rp,
    fresnel_local,
    hydrodynamic_rp,
    impedance_to_reflection,
    normal_wavevectors,
    scib_impedances,
    scib_reflection,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    "ComplexFrequency",
    "ExcitonicParams",
    "MaterialParams",
    "drude_transverse",
    "excitonic_lorentz",
    "hydrodynamic_longitudinal",
    "lindhard_longitudinal",
    "load_material",
    "ConfigError",
    "DomainError",
    "IllConditionedError",
    "IntegrandError",
    "ModelError",
    "NlCasimirError",
    "QuadratureError",
    "DperpTable",
    "ForceCurve",
    "ForcePoint",
    "MirrorModel",
    "casimir_pressure",
    "feibelman_vs_exact_curve",
    "nonlocal_correction_curve",
    "QuadratureConfig",
    "QuadResult",
    "integrate_adaptive",
    "integrate_half_line",
    "log_grid",
    "Channel",
    "Impedances",
    "NormalWavevectors",
    "centroid_dperp",
    "feibelman_rp",
    "fresnel_local",
    "hydrodynamic_rp",
    "impedance_to_reflection",
    "normal_wavevectors",
    "scib_impedances",
    "scib_reflection",
]
