from dataclasses import dataclass

import numpy as np

from shared.exceptions.validation_error import ValidationError


def chi(t, alpha: float):
    """
    Time weight t**(2(2-alpha)) on [0, 1) and 1 on [1, T].

    Args:
        t: Scalar or array of non-negative times
        alpha: Order in (1, 2]

    Returns:
        A float for scalar t, otherwise an array
    """
    return ChiWeight(alpha)(t)


@dataclass(frozen=True)
class ChiWeight:
    """The weight of the L2_chi(0, T; H) norm, compensating the t**(alpha-2) singularity."""

    alpha: float

    def __post_init__(self):
        if not 1 < self.alpha <= 2:
            raise ValidationError(f"alpha must lie in (1, 2], got {self.alpha}", code="E-ALPHA-RANGE")

    @property
    def exponent(self) -> float:
        return 2.0 * (2.0 - self.alpha)

    def __call__(self, t):
        times = np.asarray(t, dtype=float)
        if np.any(times < 0):
            raise ValidationError("The chi weight is defined for t >= 0", code="E-TEND")
        values = np.where(times < 1.0, times ** self.exponent, 1.0)
        return float(values) if times.ndim == 0 else values
