# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twin of `pure.py`: imaginary-axis mirror reflectivities and
the transverse force integrand, scalar loops in C.

Signatures and semantics match `nlcasimir._kernels.pure` exactly; the
backend selector in the package __init__ picks whichever is available.
"""
from libc.math cimport exp, sqrt

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef double C_LIGHT = 299792458.0

PERFECT = 0
LOCAL = 1
HYDRODYNAMIC = 2
FEIBELMAN_CONST = 3
FEIBELMAN_HYDRO = 4

cdef double NAN_VALUE = float("nan")


cdef inline void _refl(int code, double omega_p, double gamma, double beta2,
                       double dperp, double Q, double xi,
                       double* rs, double* rp) noexcept nogil:
    cdef double Q2, xic2, kap, et, kt, kl, corr, rp0, d
    if code == 0:
        rs[0] = -1.0
        rp[0] = 1.0
        return
    Q2 = Q * Q
    xic2 = (xi / C_LIGHT) * (xi / C_LIGHT)
    kap = sqrt(Q2 + xic2)
    et = 1.0 + omega_p * omega_p / (xi * xi + gamma * xi)
    kt = sqrt(Q2 + et * xic2)
    rs[0] = (kap - kt) / (kap + kt)
    if code == 1:
        rp[0] = (et * kap - kt) / (et * kap + kt)
        return
    if code == 2:
        kl = sqrt(Q2 + (omega_p * omega_p + xi * xi + gamma * xi) / beta2)
        corr = Q2 * (et - 1.0) / kl
        rp[0] = (et * kap - kt - corr) / (et * kap + kt + corr)
        return
    rp0 = (et * kap - kt) / (et * kap + kt)
    d = dperp
    if code == 4:
        kl = sqrt(Q2 + (omega_p * omega_p + xi * xi + gamma * xi) / beta2)
        d = -1.0 / kl
    rp[0] = rp0 * (1.0 + 2.0 * kap * et * d * Q2 / (et * kap * kap - Q2))


def reflection_s_p(int code, double omega_p, double gamma, double beta2,
                   double dperp, Q, double xi):
    """See `nlcasimir._kernels.pure.reflection_s_p`."""
    if code < 0 or code > 4:
        raise ValueError(f"unknown mirror code {code}")
    cdef cnp.ndarray[cnp.float64_t, ndim=1] q = np.ascontiguousarray(
        np.asarray(Q, dtype=np.float64).ravel()
    )
    cdef Py_ssize_t n = q.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rs = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] rp = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t i
    cdef double a, b
    with nogil:
        for i in range(n):
            _refl(code, omega_p, gamma, beta2, dperp, q[i], xi, &a, &b)
            rs[i] = a
            rp[i] = b
    shape = np.shape(Q)
    return rs.reshape(shape), rp.reshape(shape)


def force_q_integrand(Q, double xi, double L,
                      int code1, double omega_p1, double gamma1, double beta21,
                      double dperp1,
                      int code2, double omega_p2, double gamma2, double beta22,
                      double dperp2):
    """See `nlcasimir._kernels.pure.force_q_integrand`."""
    if code1 < 0 or code1 > 4 or code2 < 0 or code2 > 4:
        raise ValueError("unknown mirror code")
    cdef cnp.ndarray[cnp.float64_t, ndim=1] q = np.ascontiguousarray(
        np.asarray(Q, dtype=np.float64).ravel()
    )
    cdef Py_ssize_t n = q.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef bint same = (
        code1 == code2 and omega_p1 == omega_p2 and gamma1 == gamma2
        and beta21 == beta22 and dperp1 == dperp2
    )
    cdef Py_ssize_t i
    cdef double kap, e, gs, gp, rs1, rp1, rs2, rp2, nan_val
    nan_val = NAN_VALUE
    with nogil:
        for i in range(n):
            kap = sqrt(q[i] * q[i] + (xi / C_LIGHT) * (xi / C_LIGHT))
            _refl(code1, omega_p1, gamma1, beta21, dperp1, q[i], xi, &rs1, &rp1)
            if same:
                rs2 = rs1
                rp2 = rp1
            else:
                _refl(code2, omega_p2, gamma2, beta22, dperp2, q[i], xi,
                      &rs2, &rp2)
            e = exp(-2.0 * kap * L)
            gs = rs1 * rs2 * e
            gp = rp1 * rp2 * e
            if gs >= 1.0 or gp >= 1.0:
                out[i] = nan_val
            else:
                out[i] = q[i] * kap * (gs / (1.0 - gs) + gp / (1.0 - gp))
    return out.reshape(np.shape(Q))
