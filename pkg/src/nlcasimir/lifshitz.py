"""Zero-temperature Casimir pressure between two planar mirrors.

The force per unit area is evaluated on the imaginary frequency axis,

    F/A = (hbar/2 pi^2) Int_0^inf dxi Int_0^inf dQ Q kappa
          sum_{alpha in {s,p}} g_alpha/(1 - g_alpha),
    g_alpha = r_alpha^(1) r_alpha^(2) e^{-2 kappa L},
    kappa = sqrt(Q^2 + xi^2/c^2),

with attraction reported positive.  Mirrors are described by
`MirrorModel` values; pairs whose reflectivities have closed imaginary-
axis forms are dispatched to the compiled kernels, everything else
(currently the SCIB mirrors) goes through the generic per-channel path.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from typing import Callable

import numpy as np
from scipy.constants import c as c_light
from scipy.constants import hbar

from . import _kernels as kernels
from .dielectric import (
    ComplexFrequency,
    MaterialParams,
    drude_transverse,
    hydrodynamic_longitudinal,
    lindhard_longitudinal,
)
from .errors import (
    ConfigError,
    DomainError,
    IntegrandError,
    ModelError,
    QuadratureError,
)
from .numerics import QuadratureConfig, integrate_half_line
from .surface import Channel, scib_reflection

_PREFACTOR = hbar / (2.0 * np.pi**2)

KIND_LOCAL = "local"
KIND_HYDRODYNAMIC = "hydrodynamic"
KIND_SCIB = "scib"
KIND_FEIBELMAN = "feibelman"
KIND_PERFECT = "perfect"

EPS_L_HYDRODYNAMIC = "hydrodynamic"
EPS_L_LINDHARD = "lindhard"

# Sentinel for a per-channel centroid length d_perp = -1/k_l taken from
# the hydrodynamic longitudinal dispersion.
DPERP_HYDRODYNAMIC = "hydrodynamic"


@dataclass(frozen=True, eq=False)
class DperpTable:
    """Per-frequency table of real centroid lengths d_perp(xi).

    Lookups interpolate linearly in xi and extend both ends with a
    constant tail (the declared extrapolation rule).

    Attributes
    ----------
    xi : ndarray
        Strictly increasing imaginary frequencies (rad/s), > 0.
    d_perp : ndarray
        Centroid lengths (m), real.
    """

    xi: np.ndarray
    d_perp: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, DperpTable):
            return NotImplemented
        return np.array_equal(self.xi, other.xi) and np.array_equal(
            self.d_perp, other.d_perp
        )

    def __hash__(self):
        return hash((self.xi.tobytes(), self.d_perp.tobytes()))

    def __post_init__(self):
        xi = np.atleast_1d(np.asarray(self.xi, dtype=float))
        d = np.atleast_1d(np.asarray(self.d_perp, dtype=float))
        if xi.ndim != 1 or xi.shape != d.shape:
            raise ConfigError("d_perp table needs matching 1-D xi and d arrays")
        if not np.all(xi > 0) or (xi.size > 1 and not np.all(np.diff(xi) > 0)):
            raise ConfigError("d_perp table frequencies must be positive increasing")
        if not np.all(np.isfinite(d)):
            raise ConfigError("d_perp table values must be finite")
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "d_perp", d)

    def __call__(self, xi: float) -> float:
        return float(np.interp(xi, self.xi, self.d_perp))


@dataclass(frozen=True)
class MirrorModel:
    """Tagged choice of optical model bound to a material.

    Use the factory classmethods; the fields are:

    kind : str
        One of "perfect", "local", "hydrodynamic", "scib", "feibelman".
    material : MaterialParams, optional
        Required for every kind except "perfect".
    eps_l_model : str
        SCIB longitudinal model, "hydrodynamic" or "lindhard"; the
        transverse response is always local Drude.
    d_perp : float | DperpTable | str
        Feibelman centroid length: a real constant (m), a per-xi table,
        or the sentinel "hydrodynamic" selecting d_perp = -1/k_l per
        channel.
    """

    kind: str
    material: MaterialParams | None = None
    eps_l_model: str = EPS_L_HYDRODYNAMIC
    d_perp: float | DperpTable | str | None = None

    def __post_init__(self):
        if self.kind not in (
            KIND_PERFECT,
            KIND_LOCAL,
            KIND_HYDRODYNAMIC,
            KIND_SCIB,
            KIND_FEIBELMAN,
        ):
            raise ConfigError(f"unknown mirror kind {self.kind!r}")
        if self.kind == KIND_PERFECT:
            if self.material is not None:
                raise ConfigError("perfect mirrors take no material")
            return
        if self.material is None:
            raise ConfigError(f"mirror kind {self.kind!r} requires a material")
        if self.kind == KIND_SCIB and self.eps_l_model not in (
            EPS_L_HYDRODYNAMIC,
            EPS_L_LINDHARD,
        ):
            raise ConfigError(f"unknown SCIB eps_l model {self.eps_l_model!r}")
        if self.kind == KIND_FEIBELMAN:
            d = self.d_perp
            ok = (
                isinstance(d, DperpTable)
                or d == DPERP_HYDRODYNAMIC
                or (isinstance(d, (int, float)) and np.isfinite(d))
            )
            if not ok:
                raise ConfigError(
                    "feibelman mirrors need d_perp: a finite real length, a "
                    "DperpTable, or the sentinel 'hydrodynamic'"
                )

    @classmethod
    def perfect(cls) -> "MirrorModel":
        """Perfectly reflecting mirror (r_s = -1, r_p = +1)."""
        return cls(KIND_PERFECT)

    @classmethod
    def local(cls, material: MaterialParams) -> "MirrorModel":
        """Local Drude mirror with Fresnel amplitudes."""
        return cls(KIND_LOCAL, material)

    @classmethod
    def hydrodynamic(cls, material: MaterialParams) -> "MirrorModel":
        """Closed-form hydrodynamic mirror."""
        return cls(KIND_HYDRODYNAMIC, material)

    @classmethod
    def scib(
        cls, material: MaterialParams, eps_l_model: str = EPS_L_HYDRODYNAMIC
    ) -> "MirrorModel":
        """Semiclassical infinite-barrier mirror with the chosen
        longitudinal bulk model ("hydrodynamic" or "lindhard")."""
        return cls(KIND_SCIB, material, eps_l_model=eps_l_model)

    @classmethod
    def feibelman(
        cls, material: MaterialParams, d_perp: float | DperpTable | str
    ) -> "MirrorModel":
        """Mirror with the first-order surface-response correction; see
        `d_perp` in the class docstring."""
        return cls(KIND_FEIBELMAN, material, d_perp=d_perp)

    @property
    def descriptor(self) -> str:
        """Short human-readable model label for outputs."""
        if self.kind == KIND_PERFECT:
            return "perfect"
        if self.kind == KIND_SCIB:
            return f"scib[{self.eps_l_model}]"
        if self.kind == KIND_FEIBELMAN:
            if isinstance(self.d_perp, DperpTable):
                return "feibelman[table]"
            if self.d_perp == DPERP_HYDRODYNAMIC:
                return "feibelman[-1/k_l]"
            return f"feibelman[d={self.d_perp:.3e}m]"
        return self.kind

    def _kernel_factory(self) -> Callable[[float], tuple] | None:
        """Per-xi kernel parameter tuples, or None for the generic path."""
        if self.kind == KIND_PERFECT:
            return lambda xi: (kernels.PERFECT, 0.0, 0.0, 1.0, 0.0)
        p = self.material
        if self.kind == KIND_LOCAL:
            return lambda xi: (kernels.LOCAL, p.omega_p, p.gamma, 1.0, 0.0)
        if self.kind == KIND_HYDRODYNAMIC:
            return lambda xi: (
                kernels.HYDRODYNAMIC,
                p.omega_p,
                p.gamma,
                p.beta2,
                0.0,
            )
        if self.kind == KIND_FEIBELMAN:
            if self.d_perp == DPERP_HYDRODYNAMIC:
                return lambda xi: (
                    kernels.FEIBELMAN_HYDRO,
                    p.omega_p,
                    p.gamma,
                    p.beta2,
                    0.0,
                )
            if isinstance(self.d_perp, DperpTable):
                table = self.d_perp
                return lambda xi: (
                    kernels.FEIBELMAN_CONST,
                    p.omega_p,
                    p.gamma,
                    1.0,
                    table(xi),
                )
            d = float(self.d_perp)
            return lambda xi: (kernels.FEIBELMAN_CONST, p.omega_p, p.gamma, 1.0, d)
        return None

    def reflection_amplitudes(
        self, Q: np.ndarray, xi: float, quad: QuadratureConfig = QuadratureConfig()
    ):
        """Imaginary-axis reflection amplitudes (r_s, r_p) at each Q.

        Kernel-backed kinds evaluate in closed form; SCIB mirrors run
        one impedance quadrature per channel.
        """
        Q = np.asarray(Q, dtype=float)
        fac = self._kernel_factory()
        if fac is not None:
            return kernels.reflection_s_p(*fac(xi), Q, xi)
        p = self.material
        w = ComplexFrequency.imaginary_axis(xi)
        if self.eps_l_model == EPS_L_LINDHARD:
            eps_l = partial(lindhard_longitudinal, p)
        else:
            eps_l = partial(hydrodynamic_longitudinal, p)
        eps_t = lambda k, ww: drude_transverse(p, ww)
        rs = np.empty_like(Q)
        rp = np.empty_like(Q)
        for i, q in enumerate(Q.ravel()):
            scale = max(q, xi / c_light, p.omega_p / c_light)
            r = scib_reflection(Channel(q, w), eps_l, eps_t, quad, scale)
            rs.ravel()[i] = r[0]
            rp.ravel()[i] = r[1]
        return rs, rp


@dataclass(frozen=True)
class ForcePoint:
    """Casimir pressure at one separation.

    Attributes
    ----------
    L : float
        Plate separation (m).
    F_per_area : float
        Pressure (Pa), positive = attractive.
    error_estimate : float
        Estimated absolute numerical error (Pa): outer quadrature error
        plus rel_tol * |F| to cover the correlated inner-integral
        tolerances.
    descriptor : str
        Mirror-pair label.
    """

    L: float
    F_per_area: float
    error_estimate: float
    descriptor: str


@dataclass(frozen=True)
class ForceCurve:
    """Paired local/non-local pressures over a separation grid.

    Failed points (quadrature or model errors) are recorded in
    `failures` as (index, message) and hold None/NaN entries; completed
    points are preserved.
    """

    L: np.ndarray
    local: tuple
    non_local: tuple
    delta: np.ndarray
    failures: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures

    def force_arrays(self):
        """(F_local, F_nonlocal, err_local, err_nonlocal) with NaN at
        failed points."""
        def pick(points, attr):
            return np.array(
                [getattr(pt, attr) if pt is not None else np.nan for pt in points]
            )

        return (
            pick(self.local, "F_per_area"),
            pick(self.non_local, "F_per_area"),
            pick(self.local, "error_estimate"),
            pick(self.non_local, "error_estimate"),
        )


def _outer_scale(L: float, mirrors) -> float:
    """Decay scale of the xi integral: c/(2L), capped by the largest
    plasma frequency when any material mirror is present."""
    wp = [m.material.omega_p for m in mirrors if m.material is not None]
    s = c_light / (2.0 * L)
    if wp:
        s = min(s, max(wp))
    return s


def casimir_pressure(
    L: float,
    m1: MirrorModel,
    m2: MirrorModel,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> ForcePoint:
    """Casimir pressure between two mirrors at separation L.

    Both integrals run on mapped half-lines: the inner Q integral with
    scale max(1/(2L), xi/c) (the e^{-2 kappa L} localization), the outer
    xi integral with scale min(c/(2L), max omega_p).

    Raises
    ------
    DomainError
        For L <= 0.
    ModelError
        When a reflection product makes 1 - r r e^{-2 kappa L} <= 0
        (non-passive input).
    QuadratureError
        When either nested integral fails to converge; carries the
        partial value and achieved error estimate.
    """
    if not (np.isfinite(L) and L > 0):
        raise DomainError(f"separation must be positive and finite, got {L}")
    fac1 = m1._kernel_factory()
    fac2 = m2._kernel_factory()

    def inner(xi: float) -> float:
        scale_q = max(0.5 / L, xi / c_light)
        if fac1 is not None and fac2 is not None:
            f = lambda Q: kernels.force_q_integrand(Q, xi, L, *fac1(xi), *fac2(xi))
        else:
            f = partial(_generic_integrand, m1, m2, xi, L, cfg)
        res = integrate_half_line(f, scale_q, cfg)
        if not res.converged:
            raise QuadratureError(
                f"inner Q integral did not converge at xi={xi:.6e}",
                res.value,
                res.error,
            )
        return res.value

    def outer(xi_arr: np.ndarray) -> np.ndarray:
        return np.array([inner(float(xi)) for xi in xi_arr])

    descriptor = f"{m1.descriptor}|{m2.descriptor}"
    try:
        res = integrate_half_line(outer, _outer_scale(L, (m1, m2)), cfg)
    except IntegrandError as exc:
        raise ModelError(
            f"non-passive reflection product (1 - r r e^(-2 kappa L) <= 0) for "
            f"{descriptor}: {exc}"
        ) from exc
    if not res.converged:
        raise QuadratureError(
            f"outer xi integral did not converge for {descriptor} at L={L:.6e}",
            _PREFACTOR * res.value,
            _PREFACTOR * res.error,
        )
    F = _PREFACTOR * res.value
    err = _PREFACTOR * res.error + cfg.rel_tol * abs(F)
    return ForcePoint(L=L, F_per_area=F, error_estimate=err, descriptor=descriptor)


def _generic_integrand(m1, m2, xi, L, cfg, Q):
    kap = np.sqrt(Q * Q + (xi / c_light) ** 2)
    rs1, rp1 = m1.reflection_amplitudes(Q, xi, cfg)
    if m2 == m1:
        rs2, rp2 = rs1, rp1
    else:
        rs2, rp2 = m2.reflection_amplitudes(Q, xi, cfg)
    e = np.exp(-2.0 * kap * L)
    gs = rs1 * rs2 * e
    gp = rp1 * rp2 * e
    bad = (gs >= 1.0) | (gp >= 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = Q * kap * (gs / (1.0 - gs) + gp / (1.0 - gp))
    if bad.any():
        out = np.where(bad, np.nan, out)
    return out


def _build_nonlocal(
    material: MaterialParams,
    nonlocal_kind: str,
    d_perp=None,
    eps_l_model: str = EPS_L_HYDRODYNAMIC,
) -> MirrorModel:
    if nonlocal_kind == KIND_LOCAL:
        return MirrorModel.local(material)
    if nonlocal_kind == KIND_HYDRODYNAMIC:
        return MirrorModel.hydrodynamic(material)
    if nonlocal_kind == KIND_SCIB:
        return MirrorModel.scib(material, eps_l_model)
    if nonlocal_kind == KIND_FEIBELMAN:
        if d_perp is None:
            raise ConfigError("feibelman kind requires d_perp")
        return MirrorModel.feibelman(material, d_perp)
    raise ConfigError(f"unknown nonlocal kind {nonlocal_kind!r}")


def nonlocal_correction_curve(
    Ls: np.ndarray,
    material: MaterialParams,
    nonlocal_kind: str,
    cfg: QuadratureConfig = QuadratureConfig(),
    d_perp=None,
    eps_l_model: str = EPS_L_HYDRODYNAMIC,
) -> ForceCurve:
    """Non-local correction delta F/F over a separation grid.

    Per separation, the local-Fresnel baseline and the requested
    non-local model run at identical tolerances with identical mirrors
    on both plates; delta = (|F_nl| - |F_l|)/|F_l|.  Failing points are
    recorded and skipped; completed points are preserved.
    """
    Ls = np.asarray(Ls, dtype=float)
    if Ls.ndim != 1 or Ls.size < 1 or not np.all(np.diff(Ls) > 0):
        raise ConfigError("separation grid must be 1-D strictly increasing")
    if not np.all(Ls > 0):
        raise ConfigError("separations must be positive")
    base = MirrorModel.local(material)
    target = _build_nonlocal(material, nonlocal_kind, d_perp, eps_l_model)
    loc, nl, deltas, failures = [], [], [], []
    for i, L in enumerate(Ls):
        try:
            pl = casimir_pressure(float(L), base, base, cfg)
            pn = casimir_pressure(float(L), target, target, cfg)
        except (QuadratureError, ModelError, DomainError) as exc:
            failures.append((i, str(exc)))
            loc.append(None)
            nl.append(None)
            deltas.append(np.nan)
            continue
        loc.append(pl)
        nl.append(pn)
        deltas.append(
            (abs(pn.F_per_area) - abs(pl.F_per_area)) / abs(pl.F_per_area)
        )
    return ForceCurve(
        L=Ls,
        local=tuple(loc),
        non_local=tuple(nl),
        delta=np.array(deltas),
        failures=tuple(failures),
    )


def _linear_dperp_shift(
    L: float, p: MaterialParams, cfg: QuadratureConfig
) -> tuple[float, float]:
    """First-order force shift from the surface-response correction with
    d_perp = -1/k_l per channel.

    Only the p channel changes to first order; the shift integrand
    2 r_p0 (r_p,f - r_p0) e^{-2 kappa L}/(1 - r_p0^2 e^{-2 kappa L})^2
    is integrated directly, avoiding cancellation between two nearly
    equal forces.  Returns (shift, error_estimate) in Pa.
    """

    def inner(xi: float) -> float:
        def f(Q: np.ndarray) -> np.ndarray:
            kap = np.sqrt(Q * Q + (xi / c_light) ** 2)
            _, rp0 = kernels.reflection_s_p(
                kernels.LOCAL, p.omega_p, p.gamma, 1.0, 0.0, Q, xi
            )
            _, rpf = kernels.reflection_s_p(
                kernels.FEIBELMAN_HYDRO, p.omega_p, p.gamma, p.beta2, 0.0, Q, xi
            )
            e = np.exp(-2.0 * kap * L)
            A = rp0 * rp0 * e
            dB = 2.0 * rp0 * (rpf - rp0) * e
            return Q * kap * dB / ((1.0 - A) * (1.0 - A))

        res = integrate_half_line(f, max(0.5 / L, xi / c_light), cfg)
        if not res.converged:
            raise QuadratureError(
                f"inner Q integral (linear shift) did not converge at xi={xi:.6e}",
                res.value,
                res.error,
            )
        return res.value

    def outer(xi_arr: np.ndarray) -> np.ndarray:
        return np.array([inner(float(xi)) for xi in xi_arr])

    res = integrate_half_line(
        outer, min(c_light / (2.0 * L), p.omega_p), cfg
    )
    if not res.converged:
        raise QuadratureError(
            f"outer xi integral (linear shift) did not converge at L={L:.6e}",
            _PREFACTOR * res.value,
            _PREFACTOR * res.error,
        )
    shift = _PREFACTOR * res.value
    return shift, _PREFACTOR * res.error + cfg.rel_tol * abs(shift)


def feibelman_vs_exact_curve(
    Ls: np.ndarray,
    material: MaterialParams,
    cfg: QuadratureConfig = QuadratureConfig(),
) -> tuple[ForceCurve, ForceCurve]:
    """Exact hydrodynamic correction curve vs its long-wavelength
    surface-response approximation.

    The exact curve uses the closed-form hydrodynamic amplitude.  The
    long-wavelength curve replaces the p amplitude by its first-order
    surface-response form with d_perp = -1/k_l per channel and keeps the
    force strictly to first order in d_perp, consistent with the
    first-order nature of that amplitude.  Both share the same local
    baseline points.

    Returns
    -------
    (ForceCurve, ForceCurve)
        (exact, long_wavelength) curves on the same grid.
    """
    exact = nonlocal_correction_curve(Ls, material, KIND_HYDRODYNAMIC, cfg)
    loc, nl, deltas, failures = [], [], [], []
    for i, L in enumerate(exact.L):
        pl = exact.local[i]
        if pl is None:
            failures.append(
                (i, next(msg for j, msg in exact.failures if j == i))
            )
            loc.append(None)
            nl.append(None)
            deltas.append(np.nan)
            continue
        try:
            shift, err = _linear_dperp_shift(float(L), material, cfg)
        except (QuadratureError, ModelError) as exc:
            failures.append((i, str(exc)))
            loc.append(pl)
            nl.append(None)
            deltas.append(np.nan)
            continue
        F_lw = pl.F_per_area + shift
        nl.append(
            ForcePoint(
                L=float(L),
                F_per_area=F_lw,
                error_estimate=pl.error_estimate + err,
                descriptor="local+feibelman-linear[-1/k_l]",
            )
        )
        loc.append(pl)
        deltas.append((abs(F_lw) - abs(pl.F_per_area)) / abs(pl.F_per_area))
    lw = ForceCurve(
        L=exact.L,
        local=tuple(loc),
        non_local=tuple(nl),
        delta=np.array(deltas),
        failures=tuple(failures),
    )
    return exact, lw
