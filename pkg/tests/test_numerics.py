"""Adaptive Gauss-Kronrod quadrature and grid helpers."""
from __future__ import annotations

import math

import numpy as np
import pytest

from nlcasimir import (
    ConfigError,
    IntegrandError,
    QuadratureConfig,
    integrate_adaptive,
    integrate_half_line,
    log_grid,
)

TIGHT = QuadratureConfig(rel_tol=1e-12)


def test_polynomial_single_panel_exact():
    # the 15-point Kronrod rule integrates degree <= 22 exactly
    for deg in (0, 3, 10, 20):
        res = integrate_adaptive(lambda x: x**deg, 0.0, 1.0, TIGHT)
        assert res.converged
        assert res.value == pytest.approx(1.0 / (deg + 1), rel=1e-14)


def test_oscillatory_finite_interval():
    res = integrate_adaptive(np.sin, 0.0, 20.0, TIGHT)
    assert res.value == pytest.approx(1.0 - math.cos(20.0), rel=1e-12)
    assert res.converged


def test_exponential_half_line():
    res = integrate_half_line(lambda x: np.exp(-x), scale=1.0, config=TIGHT)
    assert res.value == pytest.approx(1.0, rel=1e-12)
    assert res.error < 1e-10


def test_lorentzian_half_line_scales():
    # int_0^inf dx / (a^2 + x^2) = pi / (2a), resolved whatever the scale
    for a in (1e-6, 1.0, 1e8):
        res = integrate_half_line(
            lambda x, a=a: 1.0 / (a * a + x * x), scale=a, config=TIGHT
        )
        assert res.converged
        assert res.value == pytest.approx(math.pi / (2.0 * a), rel=1e-11)


def test_gaussian_half_line():
    res = integrate_half_line(lambda x: np.exp(-x * x), scale=1.0, config=TIGHT)
    assert res.value == pytest.approx(math.sqrt(math.pi) / 2.0, rel=1e-12)


def test_offset_shifts_lower_limit():
    res = integrate_half_line(lambda x: np.exp(-x), scale=1.0, config=TIGHT, offset=2.5)
    assert res.value == pytest.approx(math.exp(-2.5), rel=1e-12)


def test_error_estimate_bounds_true_error():
    cases = [
        (lambda x: np.exp(-x), 1.0, 1.0),
        (lambda x: x * np.exp(-x), 1.0, 1.0),
        (lambda x: np.exp(-x) * np.sin(x), 1.0, 0.5),
        (lambda x: 1.0 / (1.0 + x * x), 1.0, math.pi / 2.0),
        (lambda x: np.exp(-np.sqrt(x)) / np.sqrt(x), 1.0, 2.0),
        (lambda x: x**3 * np.exp(-x), 1.0, 6.0),
        (lambda x: np.exp(-(x**2) / 4.0), 1.0, math.sqrt(math.pi)),
        (lambda x: np.log1p(x) * np.exp(-x), 1.0, 0.5963473623231942),
        (lambda x: 1.0 / (1.0 + x) ** 3, 1.0, 0.5),
        (lambda x: np.cos(x) * np.exp(-2.0 * x), 1.0, 0.4),
    ]
    for f, scale, exact in cases:
        res = integrate_half_line(f, scale=scale, config=QuadratureConfig(rel_tol=1e-10))
        assert res.converged
        true_err = abs(res.value - exact)
        assert true_err <= max(res.error * 10.0, 1e-13 * abs(exact))


def test_tightening_tolerance_does_not_worsen():
    exact = math.sqrt(math.pi) / 2.0
    errs = []
    for tol in (1e-4, 1e-8, 1e-12):
        res = integrate_half_line(
            lambda x: np.exp(-x * x), scale=1.0, config=QuadratureConfig(rel_tol=tol)
        )
        errs.append(abs(res.value - exact))
    assert errs[2] <= errs[0] + 1e-15
    assert errs[2] < 1e-13


def test_budget_exhaustion_sets_flag():
    # integrable endpoint singularity starves a 3-panel budget
    cfg = QuadratureConfig(rel_tol=1e-12, max_subdivisions=3)
    res = integrate_adaptive(
        lambda x: 1.0 / np.sqrt(np.abs(x - 0.3141)), 0.0, 1.0, cfg
    )
    assert not res.converged
    assert res.subdivisions == 3
    assert np.isfinite(res.value)


def test_nan_integrand_raises_with_abscissa():
    def f(x):
        return np.where(x > 0.5, np.nan, 1.0)

    with pytest.raises(IntegrandError) as exc:
        integrate_adaptive(f, 0.0, 1.0, TIGHT)
    assert exc.value.abscissa > 0.5


def test_wrong_shape_integrand_rejected():
    with pytest.raises(IntegrandError):
        integrate_adaptive(lambda x: np.ones(3), 0.0, 1.0, TIGHT)


def test_determinism_bitwise():
    def f(x):
        return np.sin(3.0 * x) / (1.0 + x * x)

    a = integrate_half_line(f, scale=2.0, config=TIGHT)
    b = integrate_half_line(f, scale=2.0, config=TIGHT)
    assert a.value == b.value
    assert a.error == b.error
    assert a.subdivisions == b.subdivisions


def test_subdivisions_counted():
    res = integrate_adaptive(
        lambda x: np.exp(-50.0 * (x - 0.7) ** 2), 0.0, 1.0, TIGHT
    )
    assert res.converged
    assert res.subdivisions >= 1
    exact = math.sqrt(math.pi / 200.0) * (
        math.erf(0.7 * math.sqrt(50.0)) + math.erf(0.3 * math.sqrt(50.0))
    )
    assert res.value == pytest.approx(exact, rel=1e-10)


def test_config_validation():
    with pytest.raises(ConfigError):
        QuadratureConfig(rel_tol=0.0)
    with pytest.raises(ConfigError):
        QuadratureConfig(rel_tol=1.5)
    with pytest.raises(ConfigError):
        QuadratureConfig(abs_tol=-1.0)
    with pytest.raises(ConfigError):
        QuadratureConfig(max_subdivisions=0)


def test_log_grid_endpoints_bit_exact():
    lo, hi = 3.7e-9, 8.1e-5
    g = log_grid(lo, hi, 37)
    assert g[0] == lo and g[-1] == hi
    assert g.shape == (37,)
    assert np.all(np.diff(g) > 0.0)


def test_log_grid_two_points():
    g = log_grid(1.0, 10.0, 2)
    assert list(g) == [1.0, 10.0]


def test_log_grid_is_geometric():
    g = log_grid(1.0, 1e4, 5)
    assert g == pytest.approx([1.0, 10.0, 100.0, 1000.0, 10000.0], rel=1e-12)


def test_log_grid_validation():
    with pytest.raises(ConfigError):
        log_grid(1.0, 1.0, 5)
    with pytest.raises(ConfigError):
        log_grid(0.0, 1.0, 5)
    with pytest.raises(ConfigError):
        log_grid(-1.0, 2.0, 5)
    with pytest.raises(ConfigError):
        log_grid(1.0, 2.0, 1)
