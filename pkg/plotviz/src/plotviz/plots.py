"""Figure builders over the nlcasimir CSV schemas."""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from matplotlib.figure import Figure

DELTA_X = "L_omega_p_over_c"
DELTA_Y = "delta_F_over_F"
SCAN_X = "xi_eV"
SCAN_YS = ("r_s", "r_p")

IMAGE_SUFFIXES = (".png", ".svg")


class SchemaError(Exception):
    """An input table does not conform to the expected column schema."""


@dataclass(frozen=True)
class PlotSpec:
    """One figure request: input tables, curve labels, output image.

    Parameters
    ----------
    inputs : tuple of Path
        CSV files conforming to the force-curve schema.
    labels : tuple of str
        Legend labels, one per input, unique.
    out : Path
        Output image path; the extension (.png or .svg) picks the format.
    log_log : bool
        Plot both axes logarithmically (the default presentation).
    """

    inputs: tuple[Path, ...]
    labels: tuple[str, ...]
    out: Path
    log_log: bool = True

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(Path(p) for p in self.inputs))
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        object.__setattr__(self, "out", Path(self.out))
        if not self.inputs:
            raise SchemaError("no input tables given")
        if len(self.labels) != len(self.inputs):
            raise SchemaError(
                f"{len(self.inputs)} inputs but {len(self.labels)} labels"
            )
        if len(set(self.labels)) != len(self.labels):
            raise SchemaError(f"labels must be unique, got {self.labels}")
        if self.out.suffix not in IMAGE_SUFFIXES:
            raise SchemaError(
                f"output extension must be one of {IMAGE_SUFFIXES}, "
                f"got {self.out.suffix!r}"
            )


def _read_columns(path: Path, names: tuple[str, ...]) -> list[np.ndarray]:
    """Extract the named numeric columns from one CSV table.

    Raises SchemaError naming the first missing column, or on a table
    with no parseable data rows.
    """
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise SchemaError(f"{path}: empty file") from None
            for name in names:
                if name not in header:
                    raise SchemaError(f"{path}: missing column {name}")
            idx = [header.index(name) for name in names]
            cols: list[list[float]] = [[] for _ in names]
            for row in reader:
                if not row or all(not c.strip() for c in row):
                    continue
                try:
                    vals = [float(row[j]) for j in idx]
                except (ValueError, IndexError) as exc:
                    raise SchemaError(f"{path}: malformed row {row!r}") from exc
                if any(math.isnan(v) for v in vals):
                    continue  # masked (failed) points are not plotted
                for c, v in zip(cols, vals):
                    c.append(v)
    except OSError as exc:
        raise SchemaError(f"{path}: {exc}") from exc
    if not cols[0]:
        raise SchemaError(f"{path}: no data rows")
    return [np.array(c) for c in cols]


def _sign_tag(delta: np.ndarray) -> str:
    if np.all(delta < 0.0):
        return "−δF/F"  # minus delta F/F
    if np.all(delta > 0.0):
        return "+δF/F"
    return "|δF/F|"


def delta_figure(spec: PlotSpec) -> Figure:
    """Build the overlay figure; all inputs are read and validated
    before any drawing so errors never leave a partial image."""
    curves = [_read_columns(p, (DELTA_X, DELTA_Y)) for p in spec.inputs]
    fig = Figure(figsize=(6.0, 4.5))
    ax = fig.subplots()
    for label, (x, delta) in zip(spec.labels, curves):
        ax.plot(x, np.abs(delta), label=f"{label} ({_sign_tag(delta)})")
    if spec.log_log:
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.set_xlabel(r"$L\,\omega_p/c$")
    ax.set_ylabel(r"$|\delta F/F|$")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    return fig


def plot_delta_curves(spec: PlotSpec) -> Path:
    """Write the |delta F/F| vs L omega_p/c overlay figure.

    One line per input table, legend from the labels (with the sign of
    the plotted correction stated), log-log axes unless disabled.

    Returns
    -------
    Path
        The written image file.
    """
    fig = delta_figure(spec)
    fig.savefig(spec.out)
    return spec.out


def reflectivity_figure(spec: PlotSpec) -> Figure:
    curves = [_read_columns(p, (SCAN_X, *SCAN_YS)) for p in spec.inputs]
    fig = Figure(figsize=(6.0, 4.5))
    ax = fig.subplots()
    for label, (E, r_s, r_p) in zip(spec.labels, curves):
        ax.plot(E, np.abs(r_s), label=f"{label} $|r_s|$")
        ax.plot(E, np.abs(r_p), linestyle="--", label=f"{label} $|r_p|$")
    ax.set_xscale("log")
    ax.set_xlabel(r"$\hbar\xi$ (eV)")
    ax.set_ylabel("reflection amplitude")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    return fig


def plot_reflectivity(spec: PlotSpec) -> Path:
    """Write a reflectivity-spectrum figure from reflectivity-scan
    tables: |r_s| and |r_p| vs imaginary-axis photon energy."""
    fig = reflectivity_figure(spec)
    fig.savefig(spec.out)
    return spec.out
