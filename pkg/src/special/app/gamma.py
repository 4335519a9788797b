import numpy as np
from scipy import special


def recip_gamma(x):
    """
    Reciprocal gamma function 1/Gamma(x), exactly zero at the poles of Gamma.

    Args:
        x: Real scalar or array

    Returns:
        A float for scalar input, otherwise an array of the same shape
    """
    values = np.asarray(x, dtype=float)
    result = special.rgamma(values)
    poles = (values <= 0) & (values == np.floor(values))
    result = np.where(poles, 0.0, result)
    if np.ndim(x) == 0:
        return float(result)
    return result
