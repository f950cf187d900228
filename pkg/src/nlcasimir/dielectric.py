"""Bulk dielectric response models on the real and imaginary frequency axes.

Four longitudinal/transverse response functions are provided: the local
Drude transverse response, the hydrodynamic longitudinal response, a
Lorentz-oscillator model with an excitonic (wave-vector-shifted)
resonance, and the Lindhard longitudinal function of a degenerate
electron gas.  All are pure functions of immutable parameter sets and
accept scalar or ndarray wave-vector magnitudes.

Frequency-axis handling is explicit: every evaluation receives a
`ComplexFrequency` whose axis tag selects either real-axis evaluation
(with the retarded branch obtained as the limit from the upper half
plane, never via a finite imaginary shift) or imaginary-axis evaluation
in pure real arithmetic.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np
from scipy.constants import (
    electron_mass,
    elementary_charge,
    epsilon_0,
    hbar,
    physical_constants,
)

from .errors import ConfigError, DomainError

BOHR_RADIUS = physical_constants["Bohr radius"][0]


def angular_frequency_from_ev(energy_ev: float) -> float:
    """Convert a photon energy in eV to an angular frequency in rad/s."""
    return energy_ev * elementary_charge / hbar


@dataclass(frozen=True)
class ExcitonicParams:
    """Parameters of the excitonic Lorentz resonance.

    Attributes
    ----------
    E_g : float
        Band gap energy (J).
    E_b : float
        Exciton binding energy (J); must satisfy E_g > E_b >= 0.
    M : float
        Exciton translational mass (kg).
    omega_p_exc2 : float
        Oscillator weight (rad²/s²).
    """

    E_g: float
    E_b: float
    M: float
    omega_p_exc2: float

    def __post_init__(self):
        if not self.E_g > self.E_b >= 0:
            raise ConfigError(
                f"need E_g > E_b >= 0, got E_g={self.E_g}, E_b={self.E_b}"
            )
        if self.M <= 0:
            raise ConfigError(f"exciton mass must be positive, got {self.M}")
        if self.omega_p_exc2 < 0:
            raise ConfigError(
                f"oscillator weight must be non-negative, got {self.omega_p_exc2}"
            )

    def omega_T(self, k) -> np.ndarray | float:
        """Resonance frequency omega_T(k) = (E_g - E_b + hbar^2 k^2/2M)/hbar."""
        return (self.E_g - self.E_b) / hbar + hbar * np.square(k) / (2.0 * self.M)


@dataclass(frozen=True)
class MaterialParams:
    """Electron-gas parameters of one mirror material (SI units).

    Attributes
    ----------
    omega_p : float
        Plasma angular frequency (rad/s).
    gamma : float
        Drude damping rate (rad/s).
    v_F : float
        Fermi velocity (m/s).
    beta2 : float
        Squared hydrodynamic compressibility speed (m²/s²); defaults to
        (3/5) v_F² exactly.
    k_F : float
        Fermi wave-vector (1/m); defaults to m_e v_F / hbar.
    eps_inf : float
        Background dielectric constant, >= 1.
    excitonic : ExcitonicParams, optional
        Present only for the excitonic Lorentz model.
    """

    omega_p: float
    gamma: float = 0.0
    v_F: float = 1.0e6
    beta2: float | None = None
    k_F: float | None = None
    eps_inf: float = 1.0
    excitonic: ExcitonicParams | None = None

    def __post_init__(self):
        if self.omega_p <= 0:
            raise ConfigError(f"omega_p must be positive, got {self.omega_p}")
        if self.gamma < 0:
            raise ConfigError(f"gamma must be non-negative, got {self.gamma}")
        if self.v_F <= 0:
            raise ConfigError(f"v_F must be positive, got {self.v_F}")
        if self.eps_inf < 1:
            raise ConfigError(f"eps_inf must be >= 1, got {self.eps_inf}")
        if self.beta2 is None:
            object.__setattr__(self, "beta2", 0.6 * self.v_F * self.v_F)
        elif self.beta2 <= 0:
            raise ConfigError(f"beta2 must be positive, got {self.beta2}")
        if self.k_F is None:
            object.__setattr__(self, "k_F", electron_mass * self.v_F / hbar)
        elif self.k_F <= 0:
            raise ConfigError(f"k_F must be positive, got {self.k_F}")

    @property
    def electron_density(self) -> float:
        """Electron number density n (1/m³) implied by omega_p."""
        return epsilon_0 * electron_mass * self.omega_p**2 / elementary_charge**2

    @classmethod
    def from_wigner_seitz(
        cls,
        r_s: float,
        gamma: float = 0.0,
        eps_inf: float = 1.0,
        excitonic: ExcitonicParams | None = None,
    ) -> "MaterialParams":
        """Construct from the Wigner-Seitz radius r_s (in Bohr radii).

        The electron density n = 3/(4 pi (r_s a_B)^3) fixes omega_p,
        k_F = (3 pi^2 n)^(1/3) and v_F = hbar k_F / m_e.
        """
        if r_s <= 0:
            raise ConfigError(f"r_s must be positive, got {r_s}")
        n = 3.0 / (4.0 * math.pi * (r_s * BOHR_RADIUS) ** 3)
        omega_p = math.sqrt(n * elementary_charge**2 / (epsilon_0 * electron_mass))
        k_F = (3.0 * math.pi**2 * n) ** (1.0 / 3.0)
        v_F = hbar * k_F / electron_mass
        return cls(
            omega_p=omega_p,
            gamma=gamma,
            v_F=v_F,
            k_F=k_F,
            eps_inf=eps_inf,
            excitonic=excitonic,
        )


@dataclass(frozen=True)
class ComplexFrequency:
    """Complex angular frequency with an explicit axis tag.

    The retarded prescription omega + i0+ is carried by the tag, never by
    a finite imaginary part: imaginary-axis values are i*xi with xi > 0,
    real-axis values have non-negative imaginary part (zero for the
    physical boundary).
    """

    value: complex
    axis: Literal["real", "imaginary"]

    def __post_init__(self):
        v = complex(self.value)
        object.__setattr__(self, "value", v)
        if self.axis == "imaginary":
            if v.real != 0.0 or v.imag <= 0.0:
                raise DomainError(
                    f"imaginary-axis frequency must be i*xi with xi > 0, got {v}"
                )
        elif self.axis == "real":
            if v.imag < 0.0:
                raise DomainError(
                    f"real-axis frequency must have Im >= 0, got {v}"
                )
        else:
            raise ConfigError(f"unknown frequency axis {self.axis!r}")

    @classmethod
    def real_axis(cls, omega: complex) -> "ComplexFrequency":
        return cls(complex(omega), "real")

    @classmethod
    def imaginary_axis(cls, xi: float) -> "ComplexFrequency":
        return cls(1j * xi, "imaginary")

    @property
    def is_imaginary(self) -> bool:
        return self.axis == "imaginary"

    @property
    def xi(self) -> float:
        if not self.is_imaginary:
            raise DomainError("xi is defined only on the imaginary axis")
        return self.value.imag


def _maybe_item(res, k):
    """Return a scalar when the wave-vector input was scalar."""
    if np.isscalar(k) or np.ndim(k) == 0:
        return np.asarray(res).item()
    return res


def drude_transverse(p: MaterialParams, w: ComplexFrequency):
    """Local Drude transverse dielectric function.

    Returns 1 - omega_p^2/(omega^2 + i gamma omega); on the imaginary
    axis this is the real value 1 + omega_p^2/(xi^2 + gamma xi) > 1.

    Raises
    ------
    DomainError
        At w = 0, where the Drude response has its static pole.
    """
    if w.value == 0:
        raise DomainError("Drude response is singular at zero frequency")
    if w.is_imaginary:
        xi = w.xi
        return 1.0 + p.omega_p**2 / (xi * xi + p.gamma * xi)
    omega = w.value
    return 1.0 - p.omega_p**2 / (omega * omega + 1j * p.gamma * omega)


def hydrodynamic_longitudinal(p: MaterialParams, k, w: ComplexFrequency):
    """Hydrodynamic longitudinal dielectric function.

    Returns 1 - omega_p^2/(omega^2 + i gamma omega - beta2 k^2); reduces
    exactly to `drude_transverse` at k = 0.  On the imaginary axis the
    value is real, 1 + omega_p^2/(xi^2 + gamma xi + beta2 k^2).

    Raises
    ------
    DomainError
        At w = 0 with k = 0, or exactly on the undamped bulk-plasmon
        pole omega^2 = beta2 k^2 (real axis, gamma = 0).
    """
    karr = np.asarray(k, dtype=float)
    if np.any(karr < 0):
        raise DomainError("wave-vector magnitude must be non-negative")
    if w.value == 0 and np.any(karr == 0):
        raise DomainError("hydrodynamic response needs w != 0 or k > 0")
    if w.is_imaginary:
        xi = w.xi
        res = 1.0 + p.omega_p**2 / (xi * xi + p.gamma * xi + p.beta2 * karr * karr)
        return _maybe_item(res, k)
    omega = w.value
    den = omega * omega + 1j * p.gamma * omega - p.beta2 * karr * karr
    if np.any(den == 0):
        raise DomainError("evaluation exactly on the longitudinal pole")
    return _maybe_item(1.0 - p.omega_p**2 / den, k)


def excitonic_lorentz(p: MaterialParams, k, w: ComplexFrequency):
    """Lorentz-oscillator response with an excitonic resonance shift.

    The resonance disperses as hbar omega_T(k) = E_g - E_b +
    hbar^2 k^2 / (2 M); transverse and longitudinal responses coincide
    for this model.  On the imaginary axis the value is real and exceeds
    eps_inf.

    Raises
    ------
    ConfigError
        When the material has no excitonic parameter block.
    """
    if p.excitonic is None:
        raise ConfigError("material has no excitonic parameter block")
    karr = np.asarray(k, dtype=float)
    if np.any(karr < 0):
        raise DomainError("wave-vector magnitude must be non-negative")
    wT = p.excitonic.omega_T(karr)
    if w.is_imaginary:
        xi = w.xi
        res = p.eps_inf + p.excitonic.omega_p_exc2 / (
            wT * wT + xi * xi + p.gamma * xi
        )
        return _maybe_item(res, k)
    omega = w.value
    den = wT * wT - omega * omega - 1j * p.gamma * omega
    if np.any(den == 0):
        raise DomainError("evaluation exactly on the excitonic resonance")
    return _maybe_item(p.eps_inf + p.excitonic.omega_p_exc2 / den, k)


def _lindhard_fl_imag(wdim: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Lindhard f_l on the imaginary axis in pure real arithmetic.

    With a = wdim + i v, the two logarithmic terms are complex
    conjugates, so f_l = 1/2 + Re[(1 - a^2) ln((a+1)/(a-1))]/(4 wdim).
    The log modulus uses log1p of the exact numerator-denominator
    difference (w+1)^2 - (w-1)^2 = 4w, and the log argument is a single
    atan2 of the ratio's parts; both avoid the cancellation that the
    naive forms suffer when wdim^2 + v^2 >> 1.
    """
    P = 1.0 - wdim * wdim + v * v
    S = 2.0 * wdim * v
    D = (wdim - 1.0) ** 2 + v * v
    lmod = 0.5 * np.log1p(4.0 * wdim / D)
    larg = np.arctan2(-2.0 * v, (wdim - 1.0) * (wdim + 1.0) + v * v)
    return 0.5 + (P * lmod + S * larg) / (4.0 * wdim)


def _lindhard_fl_complex(wdim: np.ndarray, u: complex | np.ndarray) -> np.ndarray:
    """Lindhard f_l by direct complex logarithms (valid for Im u > 0)."""
    a1 = wdim - u
    a2 = wdim + u
    t1 = (1.0 - a1 * a1) * np.log((a1 + 1.0) / (a1 - 1.0))
    t2 = (1.0 - a2 * a2) * np.log((a2 + 1.0) / (a2 - 1.0))
    return 0.5 + (t1 + t2) / (8.0 * wdim)


def _lindhard_fl_real_axis(wdim: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Lindhard f_l for real u with the branch continuous from Im u > 0.

    Writing each term as (1 - a^2) ln((a+1)/(a-1)), the limit from the
    upper half u-plane lands on the log cut when |a| < 1; approaching
    from above gives +i pi for a = wdim - u and -i pi for a = wdim + u.
    Coefficient zeros (1 - a^2 = 0) cancel the log divergence, so those
    terms are set to their limit 0.
    """
    x1 = wdim - u
    x2 = wdim + u
    c1 = 1.0 - x1 * x1
    c2 = 1.0 - x2 * x2
    with np.errstate(divide="ignore", invalid="ignore"):
        l1 = np.log(np.abs((x1 + 1.0) / (x1 - 1.0)))
        l2 = np.log(np.abs((x2 + 1.0) / (x2 - 1.0)))
        re = np.where(c1 == 0.0, 0.0, c1 * l1) + np.where(c2 == 0.0, 0.0, c2 * l2)
    im = np.pi * (c1 * (np.abs(x1) < 1.0) - c2 * (np.abs(x2) < 1.0))
    return 0.5 + (re + 1j * im) / (8.0 * wdim)


def lindhard_longitudinal(
    p: MaterialParams, k, w: ComplexFrequency, k_zero_limit: bool = False
):
    """Lindhard longitudinal dielectric function of the electron gas.

    Returns 1 + (3 omega_p^2/(k^2 v_F^2)) f_l(wdim, u) with
    wdim = k/(2 k_F) and u = omega/(k v_F); f_l is the standard
    particle-hole polarizability form with symmetric bracket
    coefficients [1 - (wdim -+ u)^2] on both logarithms.  On the
    imaginary axis the value is real and > 1 and is computed without
    complex arithmetic.

    Parameters
    ----------
    k_zero_limit : bool
        When True, k = 0 returns the analytic long-wavelength limit
        1 - omega_p^2/omega^2 (equal to undamped `drude_transverse`)
        instead of raising.

    Raises
    ------
    DomainError
        At k = 0 unless `k_zero_limit` is set (and w != 0).
    """
    karr = np.asarray(k, dtype=float)
    if np.any(karr < 0):
        raise DomainError("wave-vector magnitude must be non-negative")
    if np.any(karr == 0):
        if not k_zero_limit:
            raise DomainError(
                "Lindhard response is written for k > 0; pass k_zero_limit=True "
                "to use the analytic k -> 0 limit"
            )
        if w.value == 0:
            raise DomainError("k -> 0 limit of the Lindhard response needs w != 0")
        if np.ndim(karr) == 0:
            limit = MaterialParams(omega_p=p.omega_p, gamma=0.0, v_F=p.v_F)
            return drude_transverse(limit, w)
        res = np.asarray(lindhard_longitudinal(p, karr[karr > 0], w))
        out = np.empty(
            karr.shape, dtype=float if w.is_imaginary else complex
        )
        limit = MaterialParams(omega_p=p.omega_p, gamma=0.0, v_F=p.v_F)
        out[karr == 0] = drude_transverse(limit, w)
        out[karr > 0] = res
        return out

    wdim = karr / (2.0 * p.k_F)
    pref = 3.0 * p.omega_p**2 / (karr * karr * p.v_F * p.v_F)
    if w.is_imaginary:
        v = w.xi / (karr * p.v_F)
        fl = _lindhard_fl_imag(wdim, v)
    else:
        u = w.value / (karr * p.v_F)
        if np.all(np.imag(u) == 0):
            fl = _lindhard_fl_real_axis(wdim, np.real(u))
        else:
            fl = _lindhard_fl_complex(wdim, u)
    return _maybe_item(1.0 + pref * fl, k)


_TOP_KEYS = {
    "omega_p_eV",
    "gamma_eV",
    "v_F_m_per_s",
    "beta2_m2_per_s2",
    "eps_inf",
    "r_s_bohr",
    "excitonic",
}
_EXC_KEYS = {"E_g_eV", "E_b_eV", "M_me", "omega_p_exc_eV"}


def load_material(path: str | Path) -> MaterialParams:
    """Load material parameters from a TOML or JSON config file.

    The format is detected from the file extension.  Recognized keys:
    `omega_p_eV` with `v_F_m_per_s` (and optional `gamma_eV`,
    `beta2_m2_per_s2`, `eps_inf`), or alternatively `r_s_bohr` to derive
    everything from the Wigner-Seitz radius.  An optional `[excitonic]`
    table takes `E_g_eV`, `E_b_eV`, `M_me` (exciton mass in electron
    masses) and `omega_p_exc_eV`.  Unknown keys are a hard error.

    Raises
    ------
    ConfigError
        On unknown keys, missing required keys, or conflicting
        constructors (`r_s_bohr` together with `omega_p_eV`/`v_F_m_per_s`).
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read material file {path}: {exc}") from exc
    suffix = path.suffix.lower()
    if suffix == ".toml":
        try:
            import tomllib
        except ImportError:
            import tomli as tomllib
        try:
            raw = tomllib.loads(text)
        except Exception as exc:
            raise ConfigError(f"invalid TOML in {path}: {exc}") from exc
    elif suffix == ".json":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
    else:
        raise ConfigError(
            f"unsupported material file extension {suffix!r} (use .toml or .json)"
        )

    unknown = set(raw) - _TOP_KEYS
    if unknown:
        raise ConfigError(f"unknown material key(s) {sorted(unknown)} in {path}")

    excitonic = None
    if "excitonic" in raw:
        exc_raw = raw["excitonic"]
        if not isinstance(exc_raw, dict):
            raise ConfigError(f"excitonic block in {path} must be a table")
        bad = set(exc_raw) - _EXC_KEYS
        if bad:
            raise ConfigError(f"unknown excitonic key(s) {sorted(bad)} in {path}")
        missing = _EXC_KEYS - set(exc_raw)
        if missing:
            raise ConfigError(f"missing excitonic key(s) {sorted(missing)} in {path}")
        omega_exc = angular_frequency_from_ev(float(exc_raw["omega_p_exc_eV"]))
        excitonic = ExcitonicParams(
            E_g=float(exc_raw["E_g_eV"]) * elementary_charge,
            E_b=float(exc_raw["E_b_eV"]) * elementary_charge,
            M=float(exc_raw["M_me"]) * electron_mass,
            omega_p_exc2=omega_exc * omega_exc,
        )

    gamma = angular_frequency_from_ev(float(raw.get("gamma_eV", 0.0)))
    eps_inf = float(raw.get("eps_inf", 1.0))

    if "r_s_bohr" in raw:
        if "omega_p_eV" in raw or "v_F_m_per_s" in raw:
            raise ConfigError(
                f"{path}: r_s_bohr is an alternative constructor and cannot be "
                "combined with omega_p_eV or v_F_m_per_s"
            )
        if "beta2_m2_per_s2" in raw:
            raise ConfigError(
                f"{path}: beta2_m2_per_s2 cannot override the r_s_bohr constructor"
            )
        return MaterialParams.from_wigner_seitz(
            float(raw["r_s_bohr"]), gamma=gamma, eps_inf=eps_inf, excitonic=excitonic
        )

    missing = {"omega_p_eV", "v_F_m_per_s"} - set(raw)
    if missing:
        raise ConfigError(f"missing material key(s) {sorted(missing)} in {path}")
    return MaterialParams(
        omega_p=angular_frequency_from_ev(float(raw["omega_p_eV"])),
        gamma=gamma,
        v_F=float(raw["v_F_m_per_s"]),
        beta2=(
            float(raw["beta2_m2_per_s2"]) if "beta2_m2_per_s2" in raw else None
        ),
        eps_inf=eps_inf,
        excitonic=excitonic,
    )
