import math

import numpy as np

from fraccalc.domain.sampled_function import SampledFunction
from shared.exceptions.numerical_error import SingularInputError
from shared.exceptions.validation_error import DomainError, ValidationError


def gl_weights(order: float, count: int) -> np.ndarray:
    """Grunwald-Letnikov coefficients (-1)**k binom(order, k), k = 0..count - 1."""
    weights = np.empty(count)
    weights[0] = 1.0
    for k in range(1, count):
        weights[k] = weights[k - 1] * (1.0 - (order + 1.0) / k)
    return weights


def gl_derivative_num(f: SampledFunction, gamma: float, out_index: int) -> float:
    """
    First-order Grunwald-Letnikov estimate of (D**gamma f)(t_out), for smooth samples only.

    Args:
        f: Sampled function with finite values at every node
        gamma: Order in (0, 1]
        out_index: Output node

    Returns:
        h**(-gamma) sum_k w_k f(t_out - k h)

    Raises:
        DomainError: If gamma is outside (0, 1]
        SingularInputError: If any sample up to t_out is non-finite
    """
    if not 0 < gamma <= 1:
        raise DomainError(f"gamma must lie in (0, 1], got {gamma}", code="E-GAMMA-RANGE")
    if not 0 <= out_index <= f.grid.n:
        raise ValidationError(f"Node {out_index} is outside the grid 0..{f.grid.n}", code="E-GRID")
    window = f.values[: out_index + 1]
    if not np.all(np.isfinite(window)):
        raise SingularInputError("Grunwald-Letnikov differences need finite samples down to t = 0")
    weights = gl_weights(gamma, out_index + 1)
    return math.fsum(weights * window[::-1]) / f.grid.h ** gamma
