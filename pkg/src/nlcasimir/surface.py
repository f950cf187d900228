"""Reflection amplitudes of a vacuum/half-space interface.

Covers the local Fresnel amplitudes, the closed-form hydrodynamic
p-polarization amplitude, semiclassical infinite-barrier (SCIB) surface
impedances built from arbitrary bulk dielectric models, and the
first-order surface-response (Feibelman) correction to r_p.

Conventions: the mirror occupies z < 0 and fields decay away from the
interface, so every complex square root takes the branch Im >= 0 with
ties broken by Re >= 0.  On the imaginary frequency axis all radicands
are positive and every amplitude is evaluated in pure real arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.constants import c as c_light

from .dielectric import ComplexFrequency, MaterialParams, drude_transverse
from .errors import DomainError, IllConditionedError, QuadratureError
from .numerics import QuadratureConfig, integrate_half_line


def _branch_sqrt(z: complex) -> complex:
    """Square root with Im >= 0, ties (Im = 0) broken by Re >= 0."""
    w = np.sqrt(complex(z))
    if w.imag < 0 or (w.imag == 0 and w.real < 0):
        w = -w
    return w


@dataclass(frozen=True)
class Channel:
    """One (Q, frequency) evaluation point for reflection amplitudes.

    Attributes
    ----------
    Q : float
        Transverse wave-vector magnitude (1/m), >= 0.
    freq : ComplexFrequency
        Evaluation frequency with its axis tag.
    """

    Q: float
    freq: ComplexFrequency

    def __post_init__(self):
        if not (np.isfinite(self.Q) and self.Q >= 0):
            raise DomainError(f"Q must be finite and non-negative, got {self.Q}")

    @property
    def kappa(self) -> float:
        """Vacuum decay constant sqrt(Q^2 + xi^2/c^2) on the imaginary axis."""
        xi = self.freq.xi
        return math.hypot(self.Q, xi / c_light)

    @property
    def k_v(self) -> complex:
        """Normal vacuum wave-vector, branch Im >= 0 (i*kappa on the imaginary axis)."""
        if self.freq.is_imaginary:
            return 1j * self.kappa
        omega = self.freq.value
        return _branch_sqrt((omega / c_light) ** 2 - self.Q * self.Q)


@dataclass(frozen=True)
class NormalWavevectors:
    """Normal components of the vacuum, transverse and longitudinal modes."""

    k_v: complex
    k_t: complex
    k_l: complex


@dataclass(frozen=True)
class Impedances:
    """Surface impedances of the mirror and of vacuum for one channel."""

    Z_s: complex
    Z_p: complex
    Z_vs: complex
    Z_vp: complex


def normal_wavevectors(ch: Channel, p: MaterialParams) -> NormalWavevectors:
    """Vacuum, transverse (Drude) and longitudinal (hydrodynamic) normal
    wave-vectors for one channel.

    k_t = sqrt(eps_t omega^2/c^2 - Q^2) and k_l^2 = (omega^2 + i gamma
    omega - omega_p^2)/beta2 - Q^2 (the zero of the hydrodynamic
    longitudinal response), all with the decaying branch.
    """
    Q2 = ch.Q * ch.Q
    if ch.freq.is_imaginary:
        xi = ch.freq.xi
        et = drude_transverse(p, ch.freq)
        kt = math.sqrt(Q2 + et * (xi / c_light) ** 2)
        kl = math.sqrt(Q2 + (p.omega_p**2 + xi * xi + p.gamma * xi) / p.beta2)
        return NormalWavevectors(k_v=ch.k_v, k_t=1j * kt, k_l=1j * kl)
    omega = ch.freq.value
    et = drude_transverse(p, ch.freq)
    kt = _branch_sqrt(et * (omega / c_light) ** 2 - Q2)
    kl = _branch_sqrt(
        (omega * omega + 1j * p.gamma * omega - p.omega_p**2) / p.beta2 - Q2
    )
    return NormalWavevectors(k_v=ch.k_v, k_t=kt, k_l=kl)


def fresnel_local(ch: Channel, eps_t: complex):
    """Local Fresnel reflection amplitudes (r_s, r_p).

    r_s = (k_v - k_t)/(k_v + k_t) and r_p = (eps_t k_v - k_t)/(eps_t k_v
    + k_t) with k_t = sqrt(eps_t omega^2/c^2 - Q^2).  On the imaginary
    axis (real eps_t) both amplitudes are computed and returned as real
    floats.
    """
    Q2 = ch.Q * ch.Q
    if ch.freq.is_imaginary and complex(eps_t).imag == 0:
        et = complex(eps_t).real
        xi = ch.freq.xi
        kap = ch.kappa
        kt = math.sqrt(Q2 + et * (xi / c_light) ** 2)
        return (kap - kt) / (kap + kt), (et * kap - kt) / (et * kap + kt)
    omega = ch.freq.value
    kv = ch.k_v
    kt = _branch_sqrt(eps_t * (omega / c_light) ** 2 - Q2)
    return (kv - kt) / (kv + kt), (eps_t * kv - kt) / (eps_t * kv + kt)


def hydrodynamic_rp(ch: Channel, p: MaterialParams):
    """Closed-form p-polarization amplitude of a hydrodynamic mirror.

    r_p = (eps_t k_v - k_t + Q^2 (eps_t - 1)/k_l) /
          (eps_t k_v + k_t - Q^2 (eps_t - 1)/k_l)
    with the transverse response from the local Drude model and k_l from
    the hydrodynamic longitudinal dispersion.  Reduces to the local
    Fresnel amplitude when Q = 0 or |k_l| -> infinity.

    Raises
    ------
    DomainError
        If k_l = 0 (longitudinal branch point); perturb the node.
    """
    Q2 = ch.Q * ch.Q
    if ch.freq.is_imaginary:
        xi = ch.freq.xi
        et = drude_transverse(p, ch.freq)
        kap = ch.kappa
        kt = math.sqrt(Q2 + et * (xi / c_light) ** 2)
        kl = math.sqrt(Q2 + (p.omega_p**2 + xi * xi + p.gamma * xi) / p.beta2)
        corr = Q2 * (et - 1.0) / kl
        return (et * kap - kt - corr) / (et * kap + kt + corr)
    kv = normal_wavevectors(ch, p)
    if kv.k_l == 0:
        raise DomainError("longitudinal branch point k_l = 0; perturb the node")
    et = drude_transverse(p, ch.freq)
    corr = Q2 * (et - 1.0) / kv.k_l
    return (et * kv.k_v - kv.k_t + corr) / (et * kv.k_v + kv.k_t - corr)


DielectricModel = Callable[[np.ndarray, ComplexFrequency], np.ndarray]


def scib_impedances(
    ch: Channel,
    eps_l: DielectricModel,
    eps_t: DielectricModel,
    quad: QuadratureConfig = QuadratureConfig(),
    scale: float | None = None,
) -> Impedances:
    """Surface impedances of a semiclassical infinite-barrier mirror.

    Electrons are assumed specularly reflected at the surface, which
    expresses the impedances as wave-vector integrals over the bulk
    response evaluated at k = sqrt(Q^2 + k_z^2):

    Z_s = (2 xi/(pi c)) Int_0^inf dk_z / (xi^2 eps_t/c^2 + Q^2 + k_z^2)
    Z_p = (2 xi/(pi c)) Int_0^inf (dk_z/k^2) [Q^2 c^2/(xi^2 eps_l(k))
          + k_z^2/(xi^2 eps_t(k)/c^2 + k^2)]

    Both integrands are positive and pole-free on the imaginary axis,
    where this routine is defined (real-axis evaluation would cross the
    particle-hole continuum and is rejected).

    Parameters
    ----------
    eps_l, eps_t : callable
        Bulk models evaluated as eps(k, freq) with k an ndarray of
        wave-vector magnitudes; must return real values on the
        imaginary axis.
    scale : float, optional
        Decay scale for the semi-infinite k_z map; defaults to
        Q + xi/c.  Callers that know the plasma frequency should pass
        max(Q, xi/c, omega_p/c).

    Raises
    ------
    DomainError
        If the channel is not on the imaginary frequency axis.
    QuadratureError
        If either integral fails to converge within the subdivision
        budget; carries the achieved error estimate.
    """
    if not ch.freq.is_imaginary:
        raise DomainError(
            "SCIB impedances are evaluated on the imaginary frequency axis only"
        )
    xi = ch.freq.xi
    Q2 = ch.Q * ch.Q
    w = ch.freq
    if scale is None:
        scale = ch.Q + xi / c_light

    def f_s(kz: np.ndarray) -> np.ndarray:
        k = np.sqrt(Q2 + kz * kz)
        et = np.broadcast_to(np.asarray(eps_t(k, w), dtype=float), kz.shape)
        return 1.0 / (xi * xi * et / c_light**2 + Q2 + kz * kz)

    def f_p(kz: np.ndarray) -> np.ndarray:
        k2 = Q2 + kz * kz
        k = np.sqrt(k2)
        el = np.broadcast_to(np.asarray(eps_l(k, w), dtype=float), kz.shape)
        et = np.broadcast_to(np.asarray(eps_t(k, w), dtype=float), kz.shape)
        return (Q2 * c_light**2 / (xi * xi * el) + kz * kz / (
            xi * xi * et / c_light**2 + k2
        )) / k2

    pref = 2.0 * xi / (math.pi * c_light)
    res_s = integrate_half_line(f_s, scale, quad)
    if not res_s.converged:
        raise QuadratureError(
            "Z_s integral did not converge", pref * res_s.value, pref * res_s.error
        )
    res_p = integrate_half_line(f_p, scale, quad)
    if not res_p.converged:
        raise QuadratureError(
            "Z_p integral did not converge", pref * res_p.value, pref * res_p.error
        )
    kap = ch.kappa
    return Impedances(
        Z_s=pref * res_s.value,
        Z_p=pref * res_p.value,
        Z_vs=xi / (kap * c_light),
        Z_vp=kap * c_light / xi,
    )


def impedance_to_reflection(Z: Impedances):
    """Reflection amplitudes (r_s, r_p) from surface impedances.

    r_s = (Z_s - Z_vs)/(Z_s + Z_vs), r_p = (Z_vp - Z_p)/(Z_vp + Z_p).

    Raises
    ------
    DomainError
        If either denominator vanishes (degenerate channel).
    """
    den_s = Z.Z_s + Z.Z_vs
    den_p = Z.Z_vp + Z.Z_p
    if den_s == 0 or den_p == 0:
        raise DomainError("degenerate channel: vanishing impedance sum")
    return (Z.Z_s - Z.Z_vs) / den_s, (Z.Z_vp - Z.Z_p) / den_p


def scib_reflection(
    ch: Channel,
    eps_l: DielectricModel,
    eps_t: DielectricModel,
    quad: QuadratureConfig = QuadratureConfig(),
    scale: float | None = None,
):
    """Reflection amplitudes (r_s, r_p) of an SCIB mirror; see
    `scib_impedances` for the integral forms and error behavior."""
    return impedance_to_reflection(scib_impedances(ch, eps_l, eps_t, quad, scale))


def feibelman_rp(ch: Channel, eps_t: complex, r_p0: complex, d_perp: complex):
    """First-order surface-response correction to the p amplitude.

    r_p = r_p0 [1 + 2 i k_v eps_t/(1 + eps_t k_v^2/Q^2) d_perp], exactly
    affine in the centroid length d_perp.  On the imaginary axis with
    real eps_t and real d_perp the bracket is 1 + 2 kappa eps_t d_perp
    Q^2/(eps_t kappa^2 - Q^2), evaluated in real arithmetic.

    Raises
    ------
    DomainError
        At Q = 0, where the stated form is undefined.
    """
    if ch.Q == 0:
        raise DomainError("surface-response correction is undefined at Q = 0")
    Q2 = ch.Q * ch.Q
    if (
        ch.freq.is_imaginary
        and complex(eps_t).imag == 0
        and complex(d_perp).imag == 0
    ):
        et = complex(eps_t).real
        d = complex(d_perp).real
        kap = ch.kappa
        return r_p0 * (1.0 + 2.0 * kap * et * d * Q2 / (et * kap * kap - Q2))
    kv = ch.k_v
    return r_p0 * (1.0 + 2j * kv * eps_t / (1.0 + eps_t * kv * kv / Q2) * d_perp)


def centroid_dperp(z: np.ndarray, rho: np.ndarray, rcond: float = 1e-12):
    """Centroid of an induced surface charge profile.

    d_perp = Int dz z rho(z) / Int dz rho(z), both integrals by the
    trapezoidal rule on the supplied grid.

    Parameters
    ----------
    z : ndarray
        Strictly increasing depth grid (m).
    rho : ndarray
        Sampled induced density on `z`; may be complex.
    rcond : float
        Conditioning threshold: the net charge must exceed rcond times
        the integral of |rho|.

    Raises
    ------
    IllConditionedError
        When the net induced charge is below the conditioning threshold;
        the message carries the denominator magnitude.
    """
    z = np.asarray(z, dtype=float)
    rho = np.asarray(rho)
    if z.ndim != 1 or z.shape != rho.shape or z.size < 2:
        raise DomainError("need matching 1-D grids with at least 2 points")
    if not np.all(np.diff(z) > 0):
        raise DomainError("depth grid must be strictly increasing")
    den = np.trapezoid(rho, z)
    norm = np.trapezoid(np.abs(rho), z)
    if abs(den) <= rcond * norm:
        raise IllConditionedError(
            f"net induced charge {abs(den):.3e} below conditioning threshold "
            f"{rcond:.1e} * {norm:.3e}"
        )
    return np.trapezoid(z * rho, z) / den
