"""Riemann-Liouville fractional integrals and derivatives of sampled functions.

Derivatives differentiate the numerically integrated I**(n - order) f with
centred differences in the interior and one-sided stencils at t = T. Nodes 0
and 1 are never differentiated.
"""

import logging
import math

import numpy as np
from scipy import special

from fraccalc.app.product_rule import cell_moments, product_weights
from fraccalc.domain.sampled_function import SampledFunction
from fraccalc.domain.uniform_grid import UniformGrid
from shared.exceptions.numerical_error import NearBoundaryError
from shared.exceptions.validation_error import DomainError, ValidationError

logger = logging.getLogger(__name__)

MIN_DERIVATIVE_INDEX = 2

_FIRST_INTERIOR = ((1, 0.5), (-1, -0.5))
_FIRST_RIGHT = ((0, 1.5), (-1, -2.0), (-2, 0.5))
_SECOND_INTERIOR = ((1, 1.0), (0, -2.0), (-1, 1.0))
_SECOND_RIGHT = ((0, 2.0), (-1, -5.0), (-2, 4.0), (-3, -1.0))


def rl_integral_num(f: SampledFunction, beta: float, out_index: int) -> float:
    """
    Product-trapezoidal approximation of (I**beta f)(t_out).

    Args:
        f: Sampled integrand
        beta: Order in (0, 1]
        out_index: Output node

    Returns:
        The fractional integral at t_out (0 at t = 0)

    Raises:
        DomainError: If beta is outside (0, 1]
    """
    _check_order("beta", beta, 0.0, 1.0, "E-BETA-RANGE")
    _check_index(f.grid, out_index)
    return _integral_at(f, beta, out_index)


def rl_derivative_num(f: SampledFunction, gamma: float, out_index: int) -> float:
    """
    (D**gamma f)(t_out) as the first difference of I**(1 - gamma) f.

    Raises:
        DomainError: If gamma is outside (0, 1]
        NearBoundaryError: If the stencil reaches too close to t = 0
    """
    _check_order("gamma", gamma, 0.0, 1.0, "E-GAMMA-RANGE")
    _check_index(f.grid, out_index)
    stencil = _stencil(f, out_index, _FIRST_INTERIOR, _FIRST_RIGHT)
    h = f.grid.h
    return math.fsum(weight * _integral_at(f, 1.0 - gamma, node) for node, weight in stencil) / h


def rl_derivative2_num(f: SampledFunction, alpha: float, out_index: int) -> float:
    """
    (D**alpha f)(t_out) for 1 < alpha <= 2 as the second difference of I**(2 - alpha) f.

    Raises:
        DomainError: If alpha is outside (1, 2]
        NearBoundaryError: If the stencil reaches too close to t = 0
    """
    _check_order("alpha", alpha, 1.0, 2.0, "E-ALPHA-RANGE")
    _check_index(f.grid, out_index)
    stencil = _stencil(f, out_index, _SECOND_INTERIOR, _SECOND_RIGHT)
    h = f.grid.h
    return math.fsum(weight * _integral_at(f, 2.0 - alpha, node) for node, weight in stencil) / h ** 2


def rl_integral_profile(f: SampledFunction, beta: float) -> np.ndarray:
    """(I**beta f) at every node; for beta = 0 this is f itself."""
    _check_order("beta", beta, 0.0, 1.0, "E-BETA-RANGE", allow_zero=True)
    return _integral_profile(f, beta)


def rl_derivative_profile(f: SampledFunction, gamma: float) -> np.ndarray:
    """(D**gamma f) at every node, nan where the stencil is unavailable."""
    _check_order("gamma", gamma, 0.0, 1.0, "E-GAMMA-RANGE")
    integral = _integral_profile(f, 1.0 - gamma)
    h = f.grid.h
    result = np.full(integral.shape, np.nan)
    result[2:-1] = (integral[3:] - integral[1:-2]) / (2.0 * h)
    n = f.grid.n
    if n >= 3:
        result[n] = (1.5 * integral[n] - 2.0 * integral[n - 1] + 0.5 * integral[n - 2]) / h
    return result


def rl_derivative2_profile(f: SampledFunction, alpha: float) -> np.ndarray:
    """(D**alpha f) at every node for 1 < alpha <= 2, nan where the stencil is unavailable."""
    _check_order("alpha", alpha, 1.0, 2.0, "E-ALPHA-RANGE")
    integral = _integral_profile(f, 2.0 - alpha)
    h = f.grid.h
    result = np.full(integral.shape, np.nan)
    result[2:-1] = (integral[3:] - 2.0 * integral[2:-1] + integral[1:-2]) / h ** 2
    n = f.grid.n
    if n >= 4:
        result[n] = (2.0 * integral[n] - 5.0 * integral[n - 1] + 4.0 * integral[n - 2] - integral[n - 3]) / h ** 2
    return result


def _check_order(name: str, value: float, low: float, high: float, code: str, allow_zero: bool = False) -> None:
    lower_ok = value >= low if allow_zero else value > low
    if not (lower_ok and value <= high):
        raise DomainError(f"{name} must lie in ({low}, {high}], got {value}", code=code)


def _check_index(grid: UniformGrid, index: int) -> None:
    if not 0 <= index <= grid.n:
        raise ValidationError(f"Node {index} is outside the grid 0..{grid.n}", code="E-GRID")


def _stencil(f: SampledFunction, index: int, interior, right) -> list[tuple[int, float]]:
    if index < MIN_DERIVATIVE_INDEX:
        raise NearBoundaryError(
            f"Node {index} is too close to t = 0: fewer than 4 nodes available for the stencil"
        )
    offsets = right if index == f.grid.n else interior
    stencil = [(index + offset, weight) for offset, weight in offsets]
    lowest = min(node for node, _ in stencil)
    if lowest < 1:
        raise NearBoundaryError(f"Stencil at node {index} needs node {lowest}; refine the grid")
    return stencil


def _integral_at(f: SampledFunction, order: float, index: int) -> float:
    if order == 0:
        return float(f.values[index])
    if index == 0:
        if f.is_singular and order + f.singular_exponent <= 0:
            raise NearBoundaryError("Fractional integral of the declared singularity is not finite at t = 0")
        return 0.0
    exponent = f.singular_exponent if f.is_singular else 0.0
    weights = product_weights(f.grid, index, order, exponent)
    phi = f.regular_part()[: index + 1]
    return math.fsum(weights * phi) / special.gamma(order)


def _integral_profile(f: SampledFunction, order: float) -> np.ndarray:
    if order == 0:
        return np.array(f.values, dtype=float)
    grid = f.grid
    n = grid.n
    phi = f.regular_part()
    profile = np.empty(n + 1)
    if not f.is_singular:
        left, right = cell_moments(n, order)
        profile[0] = 0.0
        profile[1:] = (np.convolve(left, phi)[:n] + np.convolve(right, phi[1:])[:n]) * grid.h ** order
    else:
        profile[0] = 0.0 if order + f.singular_exponent > 0 else np.nan
        for index in range(1, n + 1):
            weights = product_weights(grid, index, order, f.singular_exponent)
            profile[index] = math.fsum(weights * phi[: index + 1])
    profile[1:] /= special.gamma(order)
    logger.debug("Fractional integral of order %g computed on %d nodes", order, n + 1)
    return profile
