"""Shared fixtures for the test suite."""
from __future__ import annotations

import pytest

from nlcasimir import MaterialParams, QuadratureConfig
from nlcasimir.dielectric import angular_frequency_from_ev


@pytest.fixture(scope="session")
def gold() -> MaterialParams:
    """Gold Drude parameters used throughout: 9 eV plasma energy,
    35 meV relaxation, Fermi velocity 1.40e6 m/s."""
    return MaterialParams(
        omega_p=angular_frequency_from_ev(9.0),
        gamma=angular_frequency_from_ev(0.035),
        v_F=1.40e6,
    )


@pytest.fixture(scope="session")
def lossless_gold() -> MaterialParams:
    """Same electron gas without relaxation; keeps limits exact."""
    return MaterialParams(omega_p=angular_frequency_from_ev(9.0), v_F=1.40e6)


@pytest.fixture(scope="session")
def loose_cfg() -> QuadratureConfig:
    """Fast quadrature settings for smoke-level force evaluations."""
    return QuadratureConfig(rel_tol=1e-6)
