"""Command-line interface: material/scenario parsing, sweeps, tables.

Scenarios
---------
force-curve
    Casimir pressure over a separation grid for one mirror model (both
    plates identical).  The local-Fresnel baseline fills the F_local
    column; with --perfect-mirror both columns hold the perfect-mirror
    pressure.
delta-curve
    Non-local correction delta F/F = (|F_nl| - |F_l|)/|F_l| over a
    separation grid for the chosen model against the local baseline.
feibelman-compare
    Writes two delta tables, <out>_exact.<ext> (closed-form
    hydrodynamic) and <out>_long_wavelength.<ext> (first-order
    surface-response form with d_perp = -1/k_l per channel).
reflectivity-scan
    r_s, r_p of the chosen mirror versus imaginary frequency (photon
    energy in eV) along the light line Q = xi/c.
dielectric-scan
    Bulk responses eps_t, eps_l (longitudinal sampled at k = Q) plus
    the same reflectivities versus imaginary frequency.

Force tables use the fixed column schema
L_nm,L_omega_p_over_c,F_local_Pa,F_nonlocal_Pa,delta_F_over_F,
err_local,err_nonlocal with LF line endings and 17-significant-digit
numbers, so identical runs produce byte-identical files.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np
from scipy.constants import c as c_light

from .dielectric import (
    ComplexFrequency,
    angular_frequency_from_ev,
    drude_transverse,
    excitonic_lorentz,
    hydrodynamic_longitudinal,
    lindhard_longitudinal,
    load_material,
)
from .errors import ConfigError, NlCasimirError
from .lifshitz import (
    EPS_L_HYDRODYNAMIC,
    EPS_L_LINDHARD,
    KIND_FEIBELMAN,
    KIND_HYDRODYNAMIC,
    KIND_LOCAL,
    KIND_SCIB,
    DperpTable,
    ForceCurve,
    MirrorModel,
    casimir_pressure,
    feibelman_vs_exact_curve,
    nonlocal_correction_curve,
)
from .numerics import QuadratureConfig, log_grid

SCENARIOS = (
    "force-curve",
    "delta-curve",
    "feibelman-compare",
    "reflectivity-scan",
    "dielectric-scan",
)
MODELS = ("local", "hydro", "scib-hydro", "scib-lindhard", "feibelman")

FORCE_COLUMNS = (
    "L_nm",
    "L_omega_p_over_c",
    "F_local_Pa",
    "F_nonlocal_Pa",
    "delta_F_over_F",
    "err_local",
    "err_nonlocal",
)


@dataclass(frozen=True)
class RunSpec:
    """Validated description of one CLI run."""

    scenario: str
    material_path: str | None
    model: str
    dperp: str | None
    lmin: float | None
    lmax: float | None
    xmin: float | None
    xmax: float | None
    points: int
    out: str
    fmt: str
    rel_tol: float
    perfect_mirror: bool = False

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise ConfigError(f"--scenario must be one of {SCENARIOS}")
        if self.model not in MODELS:
            raise ConfigError(f"--model must be one of {MODELS}")
        if self.points < 2:
            raise ConfigError(f"--points must be >= 2, got {self.points}")
        if self.fmt not in ("csv", "json"):
            raise ConfigError(f"--format must be csv or json, got {self.fmt}")
        if not (0 < self.rel_tol < 1):
            raise ConfigError(f"--rel-tol must lie in (0, 1), got {self.rel_tol}")
        has_l = self.lmin is not None or self.lmax is not None
        has_x = self.xmin is not None or self.xmax is not None
        if has_l and has_x:
            raise ConfigError("--lmin/--lmax and --xmin/--xmax are exclusive")
        for name, lo, hi in (
            ("--lmin/--lmax", self.lmin, self.lmax),
            ("--xmin/--xmax", self.xmin, self.xmax),
        ):
            if (lo is None) != (hi is None):
                raise ConfigError(f"{name} must be given together")
            if lo is not None and not (0 < lo < hi):
                raise ConfigError(f"{name} must satisfy 0 < min < max")
        if self.scenario in ("reflectivity-scan", "dielectric-scan") and has_l:
            raise ConfigError(
                "--lmin/--lmax do not apply to scans; use --xmin/--xmax (eV)"
            )


def default_material_path() -> Path:
    """Path of the packaged gold parameter file."""
    return Path(resources.files("nlcasimir.data") / "au.toml")


def _fmt_num(v: float) -> str:
    """17-significant-digit serialization shared by CSV and JSON."""
    return f"{v:.16e}"


def _fmt_json_num(v: float) -> str:
    return "null" if math.isnan(v) else _fmt_num(v)


def emit_table(rows, fmt: str, path: str | Path, columns=FORCE_COLUMNS) -> None:
    """Write a homogeneous numeric table as CSV or JSON.

    CSV: exact header `,`.join(columns), LF endings, one `_fmt_num`
    value per cell.  JSON: an object mapping each column name to its
    array, same number serialization (NaN becomes null).
    """
    rows = [tuple(float(v) for v in row) for row in rows]
    for row in rows:
        if len(row) != len(columns):
            raise ConfigError(
                f"row length {len(row)} does not match {len(columns)} columns"
            )
    path = Path(path)
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_fmt_num(v) for v in row) for row in rows]
        path.write_text("\n".join(lines) + "\n", newline="")
    elif fmt == "json":
        parts = []
        for j, name in enumerate(columns):
            vals = ", ".join(_fmt_json_num(row[j]) for row in rows)
            parts.append(f'"{name}": [{vals}]')
        path.write_text("{" + ", ".join(parts) + "}\n", newline="")
    else:
        raise ConfigError(f"unknown table format {fmt!r}")


def _load_dperp(raw: str) -> float | DperpTable:
    """Parse --dperp: a constant in Angstrom, or a CSV table path with
    header xi_eV,d_perp_A."""
    try:
        return float(raw) * 1e-10
    except ValueError:
        pass
    path = Path(raw)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise ConfigError(f"--dperp: cannot read table {path}: {exc}") from exc
    if not lines or [c.strip() for c in lines[0].split(",")] != ["xi_eV", "d_perp_A"]:
        raise ConfigError(
            f"--dperp table {path} must start with header xi_eV,d_perp_A"
        )
    xi, d = [], []
    for ln in lines[1:]:
        if not ln.strip():
            continue
        cells = ln.split(",")
        if len(cells) != 2:
            raise ConfigError(f"--dperp table {path}: malformed row {ln!r}")
        try:
            xi.append(angular_frequency_from_ev(float(cells[0])))
            d.append(float(cells[1]) * 1e-10)
        except ValueError as exc:
            raise ConfigError(
                f"--dperp table {path}: malformed number in row {ln!r}"
            ) from exc
    if not xi:
        raise ConfigError(f"--dperp table {path} has no data rows")
    return DperpTable(xi=np.array(xi), d_perp=np.array(d))


def _curve_rows(curve: ForceCurve, omega_p: float):
    F_l, F_nl, e_l, e_nl = curve.force_arrays()
    rows = []
    for i, L in enumerate(curve.L):
        rows.append(
            (
                L * 1e9,
                L * omega_p / c_light,
                F_l[i],
                F_nl[i],
                curve.delta[i],
                e_l[i],
                e_nl[i],
            )
        )
    return rows


def _force_scenarios(spec: RunSpec, material, cfg: QuadratureConfig):
    """Run force-curve / delta-curve / feibelman-compare; returns
    (n_points, max_error, n_failures, written paths)."""
    if spec.xmin is not None:
        Ls = log_grid(spec.xmin, spec.xmax, spec.points) * c_light / material.omega_p
    elif spec.lmin is not None:
        Ls = log_grid(spec.lmin * 1e-9, spec.lmax * 1e-9, spec.points)
    else:
        Ls = log_grid(0.01, 100.0, spec.points) * c_light / material.omega_p

    if spec.scenario == "feibelman-compare":
        exact, lw = feibelman_vs_exact_curve(Ls, material, cfg)
        out = Path(spec.out)
        p_exact = out.with_name(out.stem + "_exact" + out.suffix)
        p_lw = out.with_name(out.stem + "_long_wavelength" + out.suffix)
        emit_table(_curve_rows(exact, material.omega_p), spec.fmt, p_exact)
        emit_table(_curve_rows(lw, material.omega_p), spec.fmt, p_lw)
        errs = [
            pt.error_estimate
            for c in (exact, lw)
            for pt in (*c.local, *c.non_local)
            if pt is not None
        ]
        nfail = len(exact.failures) + len(lw.failures)
        return len(Ls), max(errs, default=float("nan")), nfail, [p_exact, p_lw]

    if spec.scenario == "force-curve" and spec.perfect_mirror:
        mirror = MirrorModel.perfect()
        loc, nl, deltas, failures = [], [], [], []
        for i, L in enumerate(Ls):
            try:
                pt = casimir_pressure(float(L), mirror, mirror, cfg)
            except NlCasimirError as exc:
                failures.append((i, str(exc)))
                loc.append(None)
                nl.append(None)
                deltas.append(float("nan"))
                continue
            loc.append(pt)
            nl.append(pt)
            deltas.append(0.0)
        curve = ForceCurve(
            L=Ls,
            local=tuple(loc),
            non_local=tuple(nl),
            delta=np.array(deltas),
            failures=tuple(failures),
        )
    else:
        kind, eps_l, dperp = {
            "local": (KIND_LOCAL, EPS_L_HYDRODYNAMIC, None),
            "hydro": (KIND_HYDRODYNAMIC, EPS_L_HYDRODYNAMIC, None),
            "scib-hydro": (KIND_SCIB, EPS_L_HYDRODYNAMIC, None),
            "scib-lindhard": (KIND_SCIB, EPS_L_LINDHARD, None),
            "feibelman": (KIND_FEIBELMAN, EPS_L_HYDRODYNAMIC, "required"),
        }[spec.model]
        if dperp == "required":
            if spec.dperp is None:
                raise ConfigError("--model feibelman requires --dperp")
            dperp = _load_dperp(spec.dperp)
        curve = nonlocal_correction_curve(
            Ls, material, kind, cfg, d_perp=dperp, eps_l_model=eps_l
        )

    emit_table(_curve_rows(curve, material.omega_p), spec.fmt, spec.out)
    errs = [
        pt.error_estimate
        for pt in (*curve.local, *curve.non_local)
        if pt is not None
    ]
    return (
        len(Ls),
        max(errs, default=float("nan")),
        len(curve.failures),
        [Path(spec.out)],
    )


def _scan_scenarios(spec: RunSpec, material, cfg: QuadratureConfig):
    """Run reflectivity-scan / dielectric-scan over photon energy (eV)."""
    lo = spec.xmin if spec.xmin is not None else 0.1
    hi = spec.xmax if spec.xmax is not None else 100.0
    energies = log_grid(lo, hi, spec.points)
    kind, eps_l_model = {
        "local": (KIND_LOCAL, EPS_L_HYDRODYNAMIC),
        "hydro": (KIND_HYDRODYNAMIC, EPS_L_HYDRODYNAMIC),
        "scib-hydro": (KIND_SCIB, EPS_L_HYDRODYNAMIC),
        "scib-lindhard": (KIND_SCIB, EPS_L_LINDHARD),
        "feibelman": (KIND_FEIBELMAN, EPS_L_HYDRODYNAMIC),
    }[spec.model]
    if kind == KIND_FEIBELMAN:
        if spec.dperp is None:
            raise ConfigError("--model feibelman requires --dperp")
        mirror = MirrorModel.feibelman(material, _load_dperp(spec.dperp))
    elif kind == KIND_SCIB:
        mirror = MirrorModel.scib(material, eps_l_model)
    elif kind == KIND_HYDRODYNAMIC:
        mirror = MirrorModel.hydrodynamic(material)
    else:
        mirror = MirrorModel.local(material)

    rows = []
    for E in energies:
        xi = angular_frequency_from_ev(float(E))
        Q = xi / c_light
        rs, rp = mirror.reflection_amplitudes(np.array([Q]), xi, cfg)
        if spec.scenario == "reflectivity-scan":
            rows.append((E, Q, rs[0], rp[0]))
        else:
            w = ComplexFrequency.imaginary_axis(xi)
            et = drude_transverse(material, w)
            if material.excitonic is not None:
                el = excitonic_lorentz(material, Q, w)
            elif eps_l_model == EPS_L_LINDHARD:
                el = lindhard_longitudinal(material, Q, w)
            else:
                el = hydrodynamic_longitudinal(material, Q, w)
            rows.append((E, Q, et, el, rs[0], rp[0]))
    if spec.scenario == "reflectivity-scan":
        columns = ("xi_eV", "Q_inv_m", "r_s", "r_p")
    else:
        columns = ("xi_eV", "Q_inv_m", "eps_t", "eps_l", "r_s", "r_p")
    emit_table(rows, spec.fmt, spec.out, columns=columns)
    return len(rows), 0.0, 0, [Path(spec.out)]


def run(spec: RunSpec) -> int:
    """Execute a run spec; returns the process exit status (0 success,
    2 partial curve failure) and prints the one-line JSON summary to
    stderr.  Configuration problems raise ConfigError (exit 1 in main)."""
    start = time.perf_counter()
    material = load_material(
        spec.material_path if spec.material_path else default_material_path()
    )
    cfg = QuadratureConfig(rel_tol=spec.rel_tol)
    if spec.scenario in ("reflectivity-scan", "dielectric-scan"):
        points, max_err, nfail, _ = _scan_scenarios(spec, material, cfg)
    else:
        points, max_err, nfail, _ = _force_scenarios(spec, material, cfg)
    summary = {
        "scenario": spec.scenario,
        "points": points,
        "max_error_estimate": max_err,
        "wall_time": time.perf_counter() - start,
    }
    print(json.dumps(summary), file=sys.stderr)
    return 2 if nfail else 0


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; the CLI contract
    reserves 2 for partial curve failure, so remap to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(
        prog="nlcasimir",
        description=(
            "Casimir pressure between planar mirrors with spatially "
            "dispersive dielectric models"
        ),
    )
    ap.add_argument("--scenario", default="delta-curve", choices=SCENARIOS)
    ap.add_argument(
        "--material",
        default=None,
        help="material config file (TOML/JSON); default: packaged gold",
    )
    ap.add_argument("--model", default="hydro", choices=MODELS)
    ap.add_argument(
        "--dperp",
        default=None,
        help="Feibelman centroid: constant in Angstrom, or CSV table path "
        "(header xi_eV,d_perp_A)",
    )
    ap.add_argument("--lmin", type=float, default=None, help="min separation (nm)")
    ap.add_argument("--lmax", type=float, default=None, help="max separation (nm)")
    ap.add_argument(
        "--xmin",
        type=float,
        default=None,
        help="min dimensionless separation L omega_p/c (force scenarios) or "
        "min photon energy in eV (scans)",
    )
    ap.add_argument("--xmax", type=float, default=None, help="max of --xmin range")
    ap.add_argument("--points", type=int, default=81)
    ap.add_argument("--out", default=None, help="output path (default scenario name)")
    ap.add_argument("--format", default="csv", choices=("csv", "json"))
    ap.add_argument("--rel-tol", type=float, default=1e-8)
    ap.add_argument(
        "--perfect-mirror",
        action="store_true",
        help="force-curve only: perfectly reflecting mirrors on both plates",
    )
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    try:
        spec = RunSpec(
            scenario=ns.scenario,
            material_path=ns.material,
            model=ns.model,
            dperp=ns.dperp,
            lmin=ns.lmin,
            lmax=ns.lmax,
            xmin=ns.xmin,
            xmax=ns.xmax,
            points=ns.points,
            out=ns.out if ns.out else f"{ns.scenario.replace('-', '_')}.{ns.format}",
            fmt=ns.format,
            rel_tol=ns.rel_tol,
            perfect_mirror=ns.perfect_mirror,
        )
        return run(spec)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
