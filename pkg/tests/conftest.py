"""Shared fixtures and configuration for all tests."""

import math

import mpmath
import pytest

from solvers.domain.equation_params import EquationParams
from spectral.infra.dirichlet_laplacian import DirichletLaplacian

ORACLE_DIGITS = 50
ORACLE_MIN_TERMS = 200


def ml_oracle(alpha: float, beta: float, z: float) -> float:
    """E_{alpha,beta}(z) from the plain power series at 50 digits, at least 200 terms."""
    with mpmath.workdps(ORACLE_DIGITS):
        a, b, x = mpmath.mpf(alpha), mpmath.mpf(beta), mpmath.mpf(z)
        tolerance = mpmath.mpf(10) ** (-ORACLE_DIGITS)
        total = mpmath.mpf(0)
        power = mpmath.mpf(1)
        k = 0
        while True:
            term = power * mpmath.rgamma(a * k + b)
            total += term
            if k >= ORACLE_MIN_TERMS and abs(term) <= tolerance * max(abs(total), tolerance):
                break
            power *= x
            k += 1
        return float(total)


@pytest.fixture
def oracle():
    """Fixture providing the independent high-precision Mittag-Leffler oracle."""
    return ml_oracle


@pytest.fixture
def classical_eq():
    """Fixture providing u'' + u = f on (0, pi)."""
    return EquationParams(alpha=2.0, m=-1.0, t_end=math.pi)


@pytest.fixture
def fractional_eq():
    """Fixture providing D**1.5 u + u = f on (0, 1)."""
    return EquationParams(alpha=1.5, m=-1.0, t_end=1.0)


@pytest.fixture
def dirichlet():
    """Fixture providing the Dirichlet Laplacian on (0, pi)."""
    return DirichletLaplacian()
