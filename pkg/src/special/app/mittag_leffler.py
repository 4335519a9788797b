"""Two-parameter Mittag-Leffler function E_{alpha,beta}(z) for real alpha > 0, real beta and real z.

Regimes, with r = |z|**(1/alpha):

* z >= 0, or r <= FLOAT_SERIES_RADIUS: power series summed in floating point.
* z < 0 and r >= ASYMPTOTIC_RADIUS: inverse-power expansion truncated at its
  smallest term, plus the exponentially small oscillatory pair.
* otherwise: the branch-cut integral representation plus the same pair,
  or the series in extended precision when alpha is too close to 1 for it.
* beta <= 0 is first lifted with E_{a,b}(z) = z E_{a,a+b}(z) + 1/Gamma(b).
"""

import logging
import math
from typing import NamedTuple

import mpmath
import numpy as np
from scipy import integrate, special

from shared.exceptions.numerical_error import MLOverflowError
from shared.exceptions.validation_error import DomainError
from special.app.gamma import recip_gamma
from special.domain.ml_query import MLMethod, MLQuery, MLResult

logger = logging.getLogger(__name__)

FLOAT_SERIES_RADIUS = 4.0
ASYMPTOTIC_RADIUS = 40.0
TERM_TOLERANCE = 1e-16
SMALL_TERMS_TO_STOP = 3
MAX_SERIES_TERMS = 100_000
MAX_ASYMPTOTIC_TERMS = 500
WORKING_DIGITS = 20
MIN_BRANCH_SINE = 0.05

_EPS = float(np.finfo(float).eps)
_LOG_MAX = math.log(np.finfo(float).max)
_METHODS = tuple(MLMethod)


class _Evaluation(NamedTuple):
    values: np.ndarray
    errors: np.ndarray
    methods: np.ndarray


def ml(q: MLQuery) -> MLResult:
    """
    Evaluate E_{alpha,beta}(z) at a single query point.

    Args:
        q: The (alpha, beta, z) query

    Returns:
        An MLResult with the value, the regime used and an absolute error estimate

    Raises:
        MLOverflowError: If the value exceeds the floating point range
    """
    evaluation = _evaluate(q.alpha, q.beta, np.array([q.z], dtype=float))
    result = MLResult(
        value=float(evaluation.values[0]),
        method=_METHODS[int(evaluation.methods[0])],
        est_abs_error=float(evaluation.errors[0]),
    )
    logger.debug("E_{%g,%g}(%g) = %.17g via %s", q.alpha, q.beta, q.z, result.value, result.method.value)
    return result


def mittag_leffler(alpha: float, beta: float, z):
    """
    Evaluate E_{alpha,beta}(z) elementwise.

    Args:
        alpha: Positive order
        beta: Second parameter, any real
        z: Real scalar or array

    Returns:
        A float for scalar z, otherwise an array shaped like z

    Raises:
        DomainError: If alpha is not positive or z is not finite
        MLOverflowError: If any value exceeds the floating point range
    """
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha}", code="E-ALPHA-RANGE")
    values = _evaluate(float(alpha), float(beta), np.asarray(z, dtype=float)).values
    if np.ndim(z) == 0:
        return float(values)
    return values


def ml_series(q: MLQuery) -> MLResult:
    """Evaluate the defining power series in extended precision, whatever the size of z."""
    value, error = _extended_series(q.alpha, q.beta, q.z)
    return MLResult(value=value, method=MLMethod.SERIES, est_abs_error=error)


def ml_asymptotic(q: MLQuery) -> MLResult:
    """
    Evaluate the large negative argument expansion regardless of the regime switch.

    Raises:
        DomainError: If z is not negative
    """
    if q.z >= 0:
        raise DomainError(f"asymptotic expansion needs z < 0, got {q.z}", code="E-ML-PARAM")
    value, error = _asymptotic(q.alpha, q.beta, q.z)
    return MLResult(value=value, method=MLMethod.ASYMPTOTIC, est_abs_error=error)


def _evaluate(alpha: float, beta: float, z: np.ndarray) -> _Evaluation:
    flat = np.ravel(z).astype(float)
    if not np.all(np.isfinite(flat)):
        raise DomainError("Mittag-Leffler argument must be finite", code="E-ML-PARAM")

    if beta <= 0:
        lifted = _evaluate(alpha, alpha + beta, flat)
        values = flat * lifted.values + recip_gamma(beta)
        errors = np.abs(flat) * lifted.errors + _EPS * np.abs(values)
        methods = np.full(flat.shape, _METHODS.index(MLMethod.RECURRENCE_REDUCED), dtype=np.int8)
        return _Evaluation(values.reshape(np.shape(z)), errors.reshape(np.shape(z)), methods.reshape(np.shape(z)))

    values = np.empty_like(flat)
    errors = np.empty_like(flat)
    methods = np.empty(flat.shape, dtype=np.int8)

    radius = np.abs(flat) ** (1.0 / alpha)
    negative = flat < 0
    series = ~negative | (radius <= FLOAT_SERIES_RADIUS)
    asymptotic = negative & (radius >= ASYMPTOTIC_RADIUS)
    middle = ~series & ~asymptotic

    if series.any():
        values[series], errors[series] = _float_series(alpha, beta, flat[series])
        methods[series] = _METHODS.index(MLMethod.SERIES)

    for index in np.flatnonzero(asymptotic):
        values[index], errors[index] = _asymptotic(alpha, beta, flat[index])
    methods[asymptotic] = _METHODS.index(MLMethod.ASYMPTOTIC)

    if middle.any():
        if _branch_cut_is_stable(alpha):
            values[middle], errors[middle] = _branch_cut(alpha, beta, -flat[middle])
            methods[middle] = _METHODS.index(MLMethod.INTEGRAL)
        else:
            for index in np.flatnonzero(middle):
                values[index], errors[index] = _extended_series(alpha, beta, flat[index])
            methods[middle] = _METHODS.index(MLMethod.SERIES)

    shape = np.shape(z)
    return _Evaluation(values.reshape(shape), errors.reshape(shape), methods.reshape(shape))


def _float_series(alpha: float, beta: float, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # beta > 0 here, so every Gamma(alpha*k + beta) is positive
    positive = z > 0
    if positive.any():
        growth = z[positive] ** (1.0 / alpha) + (1.0 - beta) / alpha * np.log(z[positive]) - math.log(alpha)
        if np.any(growth > _LOG_MAX):
            raise MLOverflowError(
                f"E_{{{alpha},{beta}}}(z) overflows for z = {float(np.max(z))}"
            )

    nonzero = z != 0
    log_abs = np.zeros_like(z)
    log_abs[nonzero] = np.log(np.abs(z[nonzero]))
    odd_sign = np.where(z < 0, -1.0, 1.0)

    total = np.zeros_like(z)
    bound = np.zeros_like(z)
    last = np.zeros_like(z)
    small_run = np.zeros(z.shape, dtype=int)
    active = np.ones(z.shape, dtype=bool)

    for k in range(MAX_SERIES_TERMS):
        log_gamma = float(special.gammaln(alpha * k + beta))
        if k == 0:
            magnitude = np.full_like(z, math.exp(-log_gamma))
        else:
            with np.errstate(over="ignore", under="ignore"):
                magnitude = np.where(nonzero, np.exp(k * log_abs - log_gamma), 0.0)
        term = magnitude * (odd_sign if k % 2 else 1.0)
        term = np.where(active, term, 0.0)

        total += term
        bound += np.abs(term) * _EPS * (4.0 + k * np.abs(log_abs) + abs(log_gamma))
        last = np.where(active, np.abs(term), last)

        tiny = np.abs(term) <= TERM_TOLERANCE * np.abs(total)
        small_run = np.where(tiny, small_run + 1, 0)
        active &= small_run < SMALL_TERMS_TO_STOP
        if not active.any():
            break
    else:
        logger.warning("Mittag-Leffler series hit %d terms without meeting the stopping rule", MAX_SERIES_TERMS)

    if not np.all(np.isfinite(total)):
        raise MLOverflowError(f"E_{{{alpha},{beta}}}(z) overflows for z = {float(np.max(z))}")
    return total, bound + last


def _extended_series(alpha: float, beta: float, z: float) -> tuple[float, float]:
    radius = abs(z) ** (1.0 / alpha)
    digits = WORKING_DIGITS + int(math.ceil(radius / math.log(10))) + 5
    with mpmath.workdps(digits):
        a, b, x = mpmath.mpf(alpha), mpmath.mpf(beta), mpmath.mpf(z)
        tolerance = mpmath.mpf(10) ** (-digits)
        total = mpmath.mpf(0)
        power = mpmath.mpf(1)
        term = mpmath.mpf(0)
        small_run = 0
        for k in range(MAX_SERIES_TERMS):
            term = power * mpmath.rgamma(a * k + b)
            total += term
            if abs(term) <= tolerance * abs(total) and k * alpha > radius:
                small_run += 1
                if small_run >= SMALL_TERMS_TO_STOP:
                    break
            else:
                small_run = 0
            power *= x
        value = float(total)
        error = float(abs(term))
    if not math.isfinite(value):
        raise MLOverflowError(f"E_{{{alpha},{beta}}}({z}) overflows")
    return value, error + _EPS * abs(value)


def _oscillatory_part(alpha: float, beta: float, x):
    """Residue contribution of the poles s = x**(1/alpha) exp(+-i pi/alpha) to E_{alpha,beta}(-x)."""
    x = np.asarray(x, dtype=float)
    if alpha > 1:
        root = x ** (1.0 / alpha)
        amplitude = (2.0 / alpha) * x ** ((1.0 - beta) / alpha) * np.exp(root * math.cos(math.pi / alpha))
        return amplitude * np.cos(root * math.sin(math.pi / alpha) + math.pi * (1.0 - beta) / alpha)
    if alpha == 1:
        return x ** (1.0 - beta) * np.exp(-x) * math.cos(math.pi * (1.0 - beta))
    return np.zeros_like(x)


def _asymptotic(alpha: float, beta: float, z: float) -> tuple[float, float]:
    x = -z
    oscillatory = float(_oscillatory_part(alpha, beta, x))
    algebraic = 0.0
    magnitude_sum = abs(oscillatory)
    previous = math.inf
    omitted = 0.0
    power = 1.0
    for k in range(1, MAX_ASYMPTOTIC_TERMS + 1):
        power /= z
        term = -power * recip_gamma(beta - alpha * k)
        size = abs(term)
        if not math.isfinite(size):
            omitted = previous
            break
        if size == 0.0:
            continue
        if size > previous:
            omitted = previous
            break
        algebraic += term
        magnitude_sum += size
        previous = size
        if size <= TERM_TOLERANCE * abs(algebraic + oscillatory):
            omitted = size
            break
    else:
        omitted = previous if math.isfinite(previous) else 0.0
    value = algebraic + oscillatory
    return value, omitted + 4.0 * _EPS * magnitude_sum


def _branch_cut_is_stable(alpha: float) -> bool:
    # the denominator below has minimum x**2 sin(pi alpha)**2 when cos(pi alpha) < 0
    return math.cos(math.pi * alpha) >= 0 or abs(math.sin(math.pi * alpha)) >= MIN_BRANCH_SINE


def _branch_cut(alpha: float, beta: float, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """E_{alpha,beta}(-x) from the Hankel contour collapsed onto the negative axis, x > 0."""
    if beta > alpha:
        lowered, lowered_error = _branch_cut(alpha, beta - alpha, x)
        values = (lowered - recip_gamma(beta - alpha)) / (-x)
        return values, lowered_error / x + _EPS * np.abs(values)

    # u = r**c removes the r**(alpha - beta) endpoint behaviour
    c = alpha - beta + 1.0
    sin_b = math.sin(math.pi * beta)
    sin_ab = math.sin(math.pi * (alpha - beta))
    cos_a = math.cos(math.pi * alpha)

    def integrand(u):
        r = u ** (1.0 / c)
        ra = r ** alpha
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            decay = np.exp(-r)
            kernel = (ra * sin_b - x * sin_ab) / (ra * ra + 2.0 * ra * x * cos_a + x * x)
            return np.where(decay > 0, decay * kernel * x, 0.0)

    integral, error = integrate.quad_vec(integrand, 0.0, np.inf, epsabs=1e-14, epsrel=1e-12, norm="max")
    scale = math.pi * c * x
    values = np.asarray(integral) / scale + _oscillatory_part(alpha, beta, x)
    errors = float(error) / scale + 4.0 * _EPS * np.abs(values)
    return values, errors
