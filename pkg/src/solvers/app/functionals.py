"""Analytic fractional integrals and derivatives of the general solution.

I**beta and D**gamma act on t**(nu-1) E_{alpha,nu}(m t**alpha) by shifting nu to
nu + beta and nu - gamma, so every functional is again a sum of kernels.
"""

import logging

import numpy as np
from scipy import special

from shared.exceptions.validation_error import DomainError
from shared.settings import DEFAULT_SETTINGS
from solvers.app.kernels import convolution, ml_power
from solvers.domain.equation_params import ORDER_TOLERANCE, EquationParams
from solvers.domain.problem_specs import is_critical
from solvers.domain.scalar_solution import ScalarSolution

logger = logging.getLogger(__name__)

EXTRAPOLATION_TIMES = np.geomspace(1e-2, 1e-4, 6)
MERGE_GAP = 0.1


def ibeta_of_solution(sol: ScalarSolution, beta: float, t, quad_n: int = DEFAULT_SETTINGS.quad_n):
    """
    (I**beta u)(t) of the solution, in closed form up to the source moment.

    Args:
        sol: The solution u
        beta: Order in [0, 1]; 0 is the identity
        t: Scalar or array of times
        quad_n: Nodes of the source-moment quadrature

    Returns:
        A float for scalar t, otherwise an array

    Raises:
        DomainError: If beta is outside [0, 1]
        SingularAtZeroError: If t = 0, alpha + beta < 2 and C2 != 0
    """
    if not 0 <= beta <= 1:
        raise DomainError(f"beta must lie in [0, 1], got {beta}", code="E-BETA-RANGE")
    alpha = sol.eq.alpha
    return _combine(sol, t, first=alpha + beta, second=alpha + beta - 1.0, moment=alpha + beta, quad_n=quad_n)


def dgamma_of_solution(sol: ScalarSolution, gamma: float, t, quad_n: int = DEFAULT_SETTINGS.quad_n):
    """
    (D**gamma u)(t) of the solution for 0 < gamma <= alpha - 1.

    In the critical case gamma = alpha - 1 the second kernel is t**-1 E_{alpha,0}(m t**alpha),
    evaluated through the lifting recurrence of the Mittag-Leffler function.

    Raises:
        DomainError: If gamma is outside (0, alpha - 1]
        SingularAtZeroError: If t = 0, gamma < alpha - 1 and C2 != 0
    """
    alpha = sol.eq.alpha
    if not 0 < gamma <= alpha - 1.0 + ORDER_TOLERANCE:
        raise DomainError(f"gamma must lie in (0, alpha - 1] = (0, {alpha - 1.0:g}], got {gamma}", code="E-GAMMA-RANGE")
    second = 0.0 if is_critical(alpha, gamma) else alpha - 1.0 - gamma
    return _combine(sol, t, first=alpha - gamma, second=second, moment=alpha - gamma, quad_n=quad_n)


def critical_derivative(eq: EquationParams, t):
    """
    D**(alpha-1) of the second basis function, written as m t**(alpha-1) E_{alpha,alpha}(m t**alpha).

    Equal to critical_derivative_via_beta_zero; the two paths are checked against each other.
    """
    values = eq.m * np.asarray(ml_power(eq.alpha, eq.m, eq.alpha, t))
    return float(values) if values.ndim == 0 else values


def critical_derivative_via_beta_zero(eq: EquationParams, t):
    """D**(alpha-1) of the second basis function, written as t**-1 E_{alpha,0}(m t**alpha)."""
    return ml_power(eq.alpha, eq.m, 0.0, t)


def critical_functional(sol: ScalarSolution, t, quad_n: int = DEFAULT_SETTINGS.quad_n):
    """(D**(alpha-1) u)(t), bounded at t = 0 and tending to C1."""
    eq = sol.eq
    times = np.asarray(t, dtype=float)
    total = np.zeros(times.shape)
    if sol.c1 != 0:
        total = total + sol.c1 * np.asarray(ml_power(eq.alpha, eq.m, 1.0, times))
    if sol.c2 != 0:
        total = total + sol.c2 * np.asarray(critical_derivative(eq, times))
    if not sol.source.is_zero:
        total = total + np.asarray(convolution(eq.alpha, eq.m, 1.0, sol.source, times, quad_n))
    return float(total) if times.ndim == 0 else total


def initial_functionals(sol: ScalarSolution, beta: float, quad_n: int = DEFAULT_SETTINGS.quad_n) -> tuple[float, float]:
    """
    Limits as t -> 0+ of Gamma(alpha+beta-1) t**(2-alpha-beta) (I**beta u)(t) and (D**(alpha-1) u)(t).

    Both are sampled on a geometric window of small times and extrapolated with a
    least-squares fit of L + sum_i c_i t**q_i over the known correction exponents q_i.

    Args:
        sol: The solution u
        beta: Order of the integral functional in [0, 2 - alpha]
        quad_n: Nodes of the source-moment quadrature

    Returns:
        The pair of extrapolated limits, which reproduce (C2, C1)
    """
    alpha = sol.eq.alpha
    p = sol.source.singular_exponent
    has_source = not sol.source.is_zero
    times = EXTRAPOLATION_TIMES * min(1.0, sol.eq.t_end)

    weight = special.gamma(alpha + beta - 1.0)
    weighted = weight * times ** (2.0 - alpha - beta) * np.asarray(ibeta_of_solution(sol, beta, times, quad_n))
    derivative = np.asarray(critical_functional(sol, times, quad_n))

    first_exponents = [1.0, alpha, 1.0 + alpha] + ([2.0 + p] if has_source else [])
    second_exponents = [alpha - 1.0, alpha, 2.0 * alpha - 1.0] + ([1.0 + p] if has_source else [])
    first = _extrapolate(times, weighted, first_exponents)
    second = _extrapolate(times, derivative, second_exponents)
    logger.debug("Initial functionals of %s solution: (%.12g, %.12g)", sol.family.value, first, second)
    return first, second


def condition_functionals(
    sol: ScalarSolution, beta: float, gamma: float, a: float, b: float, quad_n: int = DEFAULT_SETTINGS.quad_n
) -> tuple[float, float]:
    """((I**beta u)(a), (D**gamma u)(b))."""
    return ibeta_of_solution(sol, beta, a, quad_n), dgamma_of_solution(sol, gamma, b, quad_n)


def _combine(sol: ScalarSolution, t, first: float, second: float, moment: float, quad_n: int):
    eq = sol.eq
    times = np.asarray(t, dtype=float)
    total = np.zeros(times.shape)
    if sol.c1 != 0:
        total = total + sol.c1 * np.asarray(ml_power(eq.alpha, eq.m, first, times))
    if sol.c2 != 0:
        total = total + sol.c2 * np.asarray(ml_power(eq.alpha, eq.m, second, times))
    if not sol.source.is_zero:
        total = total + np.asarray(convolution(eq.alpha, eq.m, moment, sol.source, times, quad_n))
    return float(total) if times.ndim == 0 else total


def _extrapolate(times: np.ndarray, values: np.ndarray, exponents: list[float]) -> float:
    kept: list[float] = []
    for q in sorted(q for q in exponents if q > 0):
        if all(abs(q - other) >= MERGE_GAP for other in kept):
            kept.append(q)
    kept = kept[: times.size - 2]
    design = np.column_stack([np.ones_like(times)] + [times ** q for q in kept])
    scale = np.max(np.abs(design), axis=0)
    coefficients, *_ = np.linalg.lstsq(design / scale, values, rcond=None)
    return float(coefficients[0] / scale[0])
