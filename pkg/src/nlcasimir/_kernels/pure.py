"""Pure-numpy evaluation kernels for imaginary-axis mirror reflectivities
and the transverse-wave-vector force integrand.

This module is the reference implementation; `_fast.pyx` is a compiled
twin with identical signatures and semantics.  Mirror models are encoded
as small integers so the hot loop stays free of Python dispatch:

==== ====================================== ==========================
code model                                  parameters used
==== ====================================== ==========================
0    perfect mirror (r_s = -1, r_p = +1)    none
1    local Drude Fresnel                    omega_p, gamma
2    hydrodynamic closed form               omega_p, gamma, beta2
3    surface-response, constant d_perp      omega_p, gamma, dperp
4    surface-response, d_perp = -1/k_l      omega_p, gamma, beta2
==== ====================================== ==========================

All routines assume the imaginary frequency axis (xi > 0) and return
real float64 arrays.
"""
from __future__ import annotations

import numpy as np

C_LIGHT = 299792458.0

PERFECT = 0
LOCAL = 1
HYDRODYNAMIC = 2
FEIBELMAN_CONST = 3
FEIBELMAN_HYDRO = 4

_CODES = (PERFECT, LOCAL, HYDRODYNAMIC, FEIBELMAN_CONST, FEIBELMAN_HYDRO)


def reflection_s_p(
    code: int,
    omega_p: float,
    gamma: float,
    beta2: float,
    dperp: float,
    Q: np.ndarray,
    xi: float,
):
    """Imaginary-axis reflection amplitudes (r_s, r_p) for one mirror.

    Parameters
    ----------
    code : int
        Mirror model code (see module table).
    omega_p, gamma, beta2, dperp : float
        Material parameters in SI units; unused entries ignored.
    Q : ndarray
        Transverse wave-vector magnitudes (1/m).
    xi : float
        Imaginary frequency (rad/s), > 0.

    Returns
    -------
    (ndarray, ndarray)
        r_s and r_p at each Q.
    """
    if code not in _CODES:
        raise ValueError(f"unknown mirror code {code}")
    Q = np.asarray(Q, dtype=float)
    if code == PERFECT:
        return -np.ones_like(Q), np.ones_like(Q)
    Q2 = Q * Q
    xic2 = (xi / C_LIGHT) ** 2
    kap = np.sqrt(Q2 + xic2)
    et = 1.0 + omega_p * omega_p / (xi * xi + gamma * xi)
    kt = np.sqrt(Q2 + et * xic2)
    rs = (kap - kt) / (kap + kt)
    if code == LOCAL:
        return rs, (et * kap - kt) / (et * kap + kt)
    if code == HYDRODYNAMIC:
        kl = np.sqrt(Q2 + (omega_p * omega_p + xi * xi + gamma * xi) / beta2)
        corr = Q2 * (et - 1.0) / kl
        return rs, (et * kap - kt - corr) / (et * kap + kt + corr)
    rp0 = (et * kap - kt) / (et * kap + kt)
    if code == FEIBELMAN_HYDRO:
        kl = np.sqrt(Q2 + (omega_p * omega_p + xi * xi + gamma * xi) / beta2)
        dperp = -1.0 / kl
    return rs, rp0 * (1.0 + 2.0 * kap * et * dperp * Q2 / (et * kap * kap - Q2))


def force_q_integrand(
    Q: np.ndarray,
    xi: float,
    L: float,
    code1: int,
    omega_p1: float,
    gamma1: float,
    beta21: float,
    dperp1: float,
    code2: int,
    omega_p2: float,
    gamma2: float,
    beta22: float,
    dperp2: float,
):
    """Transverse integrand Q kappa sum_pol g/(1 - g) of the two-mirror
    radiation-pressure formula, with g = r1 r2 exp(-2 kappa L).

    Channels where a reflection product reaches g >= 1 (non-passive
    model input) are set to NaN so the adaptive quadrature reports the
    offending abscissa.

    Returns
    -------
    ndarray
        Integrand values at each Q (units 1/m^2 * 1/m = force kernel
        before the hbar/(2 pi^2) prefactor).
    """
    Q = np.asarray(Q, dtype=float)
    kap = np.sqrt(Q * Q + (xi / C_LIGHT) ** 2)
    rs1, rp1 = reflection_s_p(code1, omega_p1, gamma1, beta21, dperp1, Q, xi)
    if (code2, omega_p2, gamma2, beta22, dperp2) == (
        code1,
        omega_p1,
        gamma1,
        beta21,
        dperp1,
    ):
        rs2, rp2 = rs1, rp1
    else:
        rs2, rp2 = reflection_s_p(code2, omega_p2, gamma2, beta22, dperp2, Q, xi)
    e = np.exp(-2.0 * kap * L)
    gs = rs1 * rs2 * e
    gp = rp1 * rp2 * e
    bad = (gs >= 1.0) | (gp >= 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = Q * kap * (gs / (1.0 - gs) + gp / (1.0 - gp))
    if bad.any():
        out = np.where(bad, np.nan, out)
    return out
