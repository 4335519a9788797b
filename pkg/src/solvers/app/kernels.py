"""Mittag-Leffler power kernels of the general solution and their source convolutions."""

import logging
from functools import lru_cache

import numpy as np
from scipy import special

from shared.exceptions.numerical_error import QuadratureError, SingularAtZeroError
from shared.exceptions.validation_error import ValidationError
from shared.settings import DEFAULT_SETTINGS
from solvers.domain.equation_params import EquationParams
from solvers.domain.scalar_solution import ScalarSolution
from solvers.domain.source_term import SourceTerm
from special.app.mittag_leffler import mittag_leffler

logger = logging.getLogger(__name__)

MIN_QUAD_N = 8
_TIME_BATCH = 64


def ml_power(alpha: float, m: float, nu: float, t):
    """
    t**(nu - 1) E_{alpha,nu}(m t**alpha) for t >= 0.

    Args:
        alpha: Order of the Mittag-Leffler function
        m: Coefficient of the argument
        nu: Second Mittag-Leffler parameter
        t: Scalar or array of non-negative times

    Returns:
        A float for scalar t, otherwise an array

    Raises:
        SingularAtZeroError: If t = 0 and the kernel diverges there
    """
    times = np.asarray(t, dtype=float)
    if np.any(times < 0):
        raise ValidationError("Kernels are defined for t >= 0 only", code="E-TEND")
    origin = times == 0
    if origin.any() and nu < 1 and nu != 0:
        raise SingularAtZeroError(f"t**({nu - 1:g}) E_{{{alpha:g},{nu:g}}}(m t**{alpha:g}) diverges at t = 0")
    safe = np.where(origin, 1.0, times)
    values = safe ** (nu - 1.0) * mittag_leffler(alpha, nu, m * safe ** alpha)
    if origin.any():
        # nu = 0 is t**-1 E_{alpha,0} = m t**(alpha-1) E_{alpha,alpha}, which vanishes at 0
        values = np.where(origin, 1.0 if nu == 1 else 0.0, values)
    if times.ndim == 0:
        return float(values)
    return np.asarray(values, dtype=float)


def basis1(eq: EquationParams, t):
    """First solution of the homogeneous equation, t**(alpha-1) E_{alpha,alpha}(m t**alpha)."""
    return ml_power(eq.alpha, eq.m, eq.alpha, t)


def basis2(eq: EquationParams, t):
    """
    Second solution of the homogeneous equation, t**(alpha-2) E_{alpha,alpha-1}(m t**alpha).

    Raises:
        SingularAtZeroError: If t = 0 and alpha < 2
    """
    return ml_power(eq.alpha, eq.m, eq.alpha - 1.0, t)


@lru_cache(maxsize=64)
def _jacobi_rule(n: int, endpoint_exponent: float, origin_exponent: float) -> tuple[np.ndarray, np.ndarray]:
    # weight (1 - x)**endpoint_exponent (1 + x)**origin_exponent on [-1, 1]
    nodes, weights = special.roots_jacobi(n, endpoint_exponent, origin_exponent)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def convolution(alpha: float, m: float, nu: float, source: SourceTerm, t, quad_n: int = DEFAULT_SETTINGS.quad_n):
    """
    int_0^t f(t - s) s**(nu - 1) E_{alpha,nu}(m s**alpha) ds by Gauss-Jacobi product integration.

    The weight s**(nu - 1) and the declared source singularity (t - s)**p are absorbed
    into the Jacobi weight; only E_{alpha,nu} and the regular part of f are sampled.

    Args:
        alpha: Order of the Mittag-Leffler function
        m: Coefficient of the argument
        nu: Kernel parameter, nu > 0
        source: The source term f
        t: Scalar or array of times in [0, T]
        quad_n: Number of Gauss-Jacobi nodes

    Returns:
        A float for scalar t, otherwise an array

    Raises:
        SourceError: If the source fails to evaluate
        QuadratureError: If the result is not finite
    """
    if int(quad_n) != quad_n or quad_n < MIN_QUAD_N:
        raise ValidationError(f"quad_n must be an integer >= {MIN_QUAD_N}, got {quad_n}", code="E-QUAD")
    if not nu > 0:
        raise ValidationError(f"Convolution kernel parameter must be positive, got {nu}", code="E-QUAD")
    times = np.asarray(t, dtype=float)
    result = np.zeros(times.shape)
    if source.is_zero:
        return float(result) if times.ndim == 0 else result

    p = source.singular_exponent
    nodes, weights = _jacobi_rule(int(quad_n), round(p, 14), round(nu - 1.0, 14))
    flat_times = times.ravel()
    flat_result = result.ravel()
    positive = np.flatnonzero(flat_times > 0)
    for start in range(0, positive.size, _TIME_BATCH):
        batch = positive[start:start + _TIME_BATCH]
        horizon = flat_times[batch][:, None]
        kernel_arg = horizon * (1.0 + nodes[None, :]) / 2.0
        source_arg = horizon * (1.0 - nodes[None, :]) / 2.0
        integrand = mittag_leffler(alpha, nu, m * kernel_arg ** alpha) * source.regular(source_arg)
        flat_result[batch] = (flat_times[batch] / 2.0) ** (nu + p) * (integrand @ weights)
    if not np.all(np.isfinite(flat_result)):
        raise QuadratureError(f"Convolution with kernel parameter {nu:g} produced non-finite values")
    result = flat_result.reshape(times.shape)
    return float(result) if times.ndim == 0 else result


def duhamel(eq: EquationParams, f: SourceTerm, t, quad_n: int = DEFAULT_SETTINGS.quad_n):
    """Forced response int_0^t (t-s)**(alpha-1) E_{alpha,alpha}(m (t-s)**alpha) f(s) ds."""
    return convolution(eq.alpha, eq.m, eq.alpha, f, t, quad_n)


def evaluate_solution(sol: ScalarSolution, t, quad_n: int = DEFAULT_SETTINGS.quad_n):
    """
    Evaluate u(t) of the general solution. Vanishing constants skip their kernels.

    Raises:
        SingularAtZeroError: If t = 0, alpha < 2 and C2 != 0
    """
    times = np.asarray(t, dtype=float)
    total = np.zeros(times.shape)
    if sol.c1 != 0:
        total = total + sol.c1 * np.asarray(basis1(sol.eq, times))
    if sol.c2 != 0:
        total = total + sol.c2 * np.asarray(basis2(sol.eq, times))
    if not sol.source.is_zero:
        total = total + np.asarray(duhamel(sol.eq, sol.source, times, quad_n))
    return float(total) if times.ndim == 0 else total
