"""Presentation layer for nlcasimir CSV tables.

Pure plotting: nothing here recomputes physics.  The delta-curve figure
overlays |delta F/F| vs L omega_p/c from any number of conforming CSV
files on one log-log axis.
"""
from .plots import (
    PlotSpec,
    SchemaError,
    delta_figure,
    plot_delta_curves,
    plot_reflectivity,
    reflectivity_figure,
)

__all__ = [
    "PlotSpec",
    "SchemaError",
    "delta_figure",
    "plot_delta_curves",
    "plot_reflectivity",
    "reflectivity_figure",
]

__version__ = "0.1.0"
