"""Product-integration weights for int_0^t (t - s)**(kappa - 1) s**w phi(s) ds with phi piecewise linear."""

import numpy as np
from scipy import special

from fraccalc.domain.uniform_grid import UniformGrid
from shared.exceptions.validation_error import ValidationError

_GAUSS_NODES, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(16)
_V = 0.5 * (_GAUSS_NODES + 1.0)
_W = 0.5 * _GAUSS_WEIGHTS


def product_weights(grid: UniformGrid, index: int, kernel_order: float, weight_exponent: float = 0.0) -> np.ndarray:
    """
    Weights W with int_0^{t_index} (t_index - s)**(kappa - 1) s**w phi(s) ds = W @ phi[:index + 1].

    The kernel and the power weight are integrated exactly on every cell; phi is
    interpolated linearly between nodes.

    Args:
        grid: The sampling grid
        index: Output node
        kernel_order: kappa > 0
        weight_exponent: w > -1 (0 for no power weight)

    Returns:
        Array of index + 1 weights

    Raises:
        ValidationError: If kappa <= 0, w <= -1 or the index is off the grid
    """
    if not kernel_order > 0:
        raise ValidationError(f"Kernel order must be positive, got {kernel_order}", code="E-QUAD")
    if not weight_exponent > -1:
        raise ValidationError(f"Weight exponent must exceed -1, got {weight_exponent}", code="E-QUAD")
    if not 0 <= index <= grid.n:
        raise ValidationError(f"Node {index} is outside the grid 0..{grid.n}", code="E-GRID")
    if index == 0:
        return np.zeros(1)
    if weight_exponent == 0:
        left, right = cell_moments(index, kernel_order)
        weights = np.zeros(index + 1)
        # cell k has j = index - k
        weights[:-1] += left[::-1]
        weights[1:] += right[::-1]
        return weights * grid.h ** kernel_order
    return _power_weighted(index, kernel_order, weight_exponent) * grid.node(index) ** (kernel_order + weight_exponent)


def cell_moments(count: int, kernel_order: float) -> tuple[np.ndarray, np.ndarray]:
    """
    Left/right hat-function moments of sigma**(kappa - 1) on the cells [j - 1, j], j = 1..count.

    Returns:
        (left, right) arrays where left[j - 1] pairs with the far node of cell j
    """
    kappa = kernel_order
    j = np.arange(1, count + 1, dtype=float)
    left = np.empty(count)
    right = np.empty(count)
    left[0] = 1.0 / (kappa + 1.0)
    right[0] = 1.0 / (kappa * (kappa + 1.0))
    if count > 1:
        # smooth on cells away from the origin; closed forms lose digits there for large j
        kernel = (j[1:, None] - 1.0 + _V[None, :]) ** (kappa - 1.0)
        left[1:] = kernel @ (_W * _V)
        right[1:] = kernel @ (_W * (1.0 - _V))
    return left, right


def _power_weighted(n: int, kappa: float, w: float) -> np.ndarray:
    x = np.arange(n + 1) / n
    first = special.beta(w + 1.0, kappa) * np.diff(special.betainc(w + 1.0, kappa, x))
    second = special.beta(w + 2.0, kappa) * np.diff(special.betainc(w + 2.0, kappa, x))
    weights = np.zeros(n + 1)
    weights[:-1] += (x[1:] * first - second) * n
    weights[1:] += (second - x[:-1] * first) * n
    return weights
