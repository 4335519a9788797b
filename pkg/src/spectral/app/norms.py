"""chi-weighted L2(0, T; H) norms of series solutions and the stability ratios built on them.

Spatial norms use Parseval over the retained modes. Time integrals use Gauss-Legendre
panels graded geometrically towards t = 0, where u may behave like t**(alpha-2).
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from shared.exceptions.numerical_error import QuadratureError, ZeroDataNormError
from shared.exceptions.validation_error import ValidationError
from shared.settings import NumericalSettings
from spectral.app.projection import SpatialData, SpatioTemporalSource, coefficients, mode_sources
from spectral.app.summation import compensated_sum
from spectral.app.wave_solver import SpectralWaveSolver
from spectral.domain.chi_weight import ChiWeight
from spectral.domain.series_solution import SeriesSolution
from spectral.domain.spectrum_provider import SpectrumProvider
from spectral.infra.dirichlet_laplacian import DirichletLaplacian

logger = logging.getLogger(__name__)

QUANTITIES = ("u", "Au", "Dalpha_u")
MIN_TIME_QUAD_N = 16
GRADED_LEVELS = 20


@lru_cache(maxsize=32)
def time_rule(t_end: float, time_quad_n: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre rule on [0, T].

    [0, min(1, T)] is split at min(1, T) * 2**-k, k = 1..20, and [1, T] into unit panels.

    Raises:
        ValidationError: If time_quad_n < 16 (E-QUAD)
    """
    if int(time_quad_n) != time_quad_n or time_quad_n < MIN_TIME_QUAD_N:
        raise ValidationError(f"time_quad_n must be an integer >= {MIN_TIME_QUAD_N}, got {time_quad_n}", code="E-QUAD")
    if not t_end > 0:
        raise ValidationError(f"t_end must be positive, got {t_end}", code="E-TEND")
    head = min(1.0, t_end)
    breaks = [0.0] + [head * 2.0 ** -k for k in range(GRADED_LEVELS, 0, -1)] + [head]
    if t_end > 1.0:
        breaks += list(np.linspace(1.0, t_end, int(math.ceil(t_end - 1.0)) + 1)[1:])
    reference, reference_weights = np.polynomial.legendre.leggauss(int(time_quad_n))
    nodes, weights = [], []
    for left, right in zip(breaks[:-1], breaks[1:]):
        half = (right - left) / 2.0
        nodes.append(left + half * (reference + 1.0))
        weights.append(half * reference_weights)
    nodes, weights = np.concatenate(nodes), np.concatenate(weights)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def quantity_amplitudes(s: SeriesSolution, t, quantity: str = "u", settings: NumericalSettings | None = None) -> np.ndarray:
    """
    Mode amplitudes of u, A u (m_xi u_xi) or D**alpha u (f_xi - m_xi u_xi) at the times t.

    Returns:
        Array of shape (N, len(t))
    """
    if quantity not in QUANTITIES:
        raise ValidationError(f"Unknown quantity {quantity!r}; expected one of {list(QUANTITIES)}", code="E-CONFIG-FIELD")
    times = np.atleast_1d(np.asarray(t, dtype=float))
    amplitudes = SpectralWaveSolver(s.provider, settings).mode_amplitudes(s, times)
    if quantity == "u":
        return amplitudes
    m_xi = np.array([data.m_xi for data, _ in s.modes])[:, None]
    if quantity == "Au":
        return m_xi * amplitudes
    forcing = np.stack([np.broadcast_to(np.asarray(data.f_coef(times)), times.shape) for data, _ in s.modes])
    return forcing - m_xi * amplitudes


def weighted_l2_norm(
    s: SeriesSolution,
    t_end: float | None = None,
    time_quad_n: int | None = None,
    quantity: str = "u",
    settings: NumericalSettings | None = None,
) -> float:
    """
    (int_0^T ||q(t)||_H**2 chi(t) dt)**(1/2) for q in {u, A u, D**alpha u}.

    Args:
        s: The series solution
        t_end: Horizon T, default the solution's horizon
        time_quad_n: Gauss-Legendre nodes per time panel, at least 16
        quantity: "u", "Au" or "Dalpha_u"
        settings: Numerical settings

    Returns:
        The weighted norm

    Raises:
        QuadratureError: If the integrand is not finite
    """
    settings = settings or NumericalSettings.from_env()
    t_end = _horizon(s, t_end)
    nodes, weights = time_rule(t_end, time_quad_n or settings.time_quad_n)
    amplitudes = quantity_amplitudes(s, nodes, quantity, settings)
    return _weighted_norm(amplitudes, nodes, weights, ChiWeight(s.params.alpha))


@dataclass(frozen=True)
class DataNorms:
    """||u1||_H, ||u2||_H and ||f||_{L2(0, T; H)} over the retained modes."""

    u1: float
    u2: float
    f: float

    @property
    def total_squared(self) -> float:
        return math.fsum([self.u1 ** 2, self.u2 ** 2, self.f ** 2])

    def to_record(self) -> dict:
        return {"u1": self.u1, "u2": self.u2, "f": self.f}


def data_norms(
    u1: SpatialData,
    u2: SpatialData,
    f: SpatioTemporalSource | None,
    n_modes: int,
    sp: SpectrumProvider | None = None,
    t_end: float = 1.0,
    time_quad_n: int = NumericalSettings.time_quad_n,
) -> DataNorms:
    """Norms of the problem data, truncated to the first n_modes modes."""
    provider = sp or DirichletLaplacian()
    first = coefficients(u1, n_modes, provider)
    second = coefficients(u2, n_modes, provider)
    f_norm = 0.0
    if f is not None:
        nodes, weights = time_rule(float(t_end), int(time_quad_n))
        sources = mode_sources(f, n_modes, provider)
        values = np.stack([np.broadcast_to(np.asarray(source(nodes)), nodes.shape) for source in sources])
        f_norm = math.sqrt(_time_integral(compensated_sum(values ** 2), weights))
    return DataNorms(
        u1=math.sqrt(math.fsum(first ** 2)),
        u2=math.sqrt(math.fsum(second ** 2)),
        f=f_norm,
    )


def stability_ratio(
    s: SeriesSolution,
    norms: DataNorms,
    quantity: str = "u",
    time_quad_n: int | None = None,
    settings: NumericalSettings | None = None,
) -> float:
    """
    ||q||**2_{L2_chi} / (||u1||**2 + ||u2||**2 + ||f||**2) for q in {u, A u, D**alpha u}.

    Raises:
        ZeroDataNormError: If all data vanish
    """
    denominator = norms.total_squared
    if denominator == 0:
        raise ZeroDataNormError("Stability ratio is undefined for vanishing data")
    norm = weighted_l2_norm(s, None, time_quad_n, quantity, settings)
    ratio = norm ** 2 / denominator
    logger.debug("Stability ratio for %s on %d modes: %.6g", quantity, s.n_modes, ratio)
    return ratio


def series_difference_norm(
    s_small: SeriesSolution,
    s_large: SeriesSolution,
    t_end: float | None = None,
    time_quad_n: int | None = None,
    settings: NumericalSettings | None = None,
) -> float:
    """
    ||u_N - u_M||_{L2_chi} for two truncations of the same problem, N <= M.

    Raises:
        ValidationError: If the truncations are not nested
    """
    if s_small.n_modes > s_large.n_modes or s_small.params != s_large.params:
        raise ValidationError("Series must share parameters and be ordered by truncation", code="E-MODES")
    settings = settings or NumericalSettings.from_env()
    t_end = _horizon(s_large, t_end)
    nodes, weights = time_rule(t_end, time_quad_n or settings.time_quad_n)
    large = quantity_amplitudes(s_large, nodes, "u", settings)
    small = quantity_amplitudes(s_small, nodes, "u", settings)
    difference = large.copy()
    difference[: s_small.n_modes] -= small
    return _weighted_norm(difference, nodes, weights, ChiWeight(s_large.params.alpha))


def _horizon(s: SeriesSolution, t_end: float | None) -> float:
    if t_end is None:
        return s.params.t_end
    if not 0 < t_end <= s.params.t_end:
        raise ValidationError(f"Norm horizon must lie in (0, {s.params.t_end:g}], got {t_end}", code="E-TEND")
    return float(t_end)


def _weighted_norm(amplitudes: np.ndarray, nodes: np.ndarray, weights: np.ndarray, weight: ChiWeight) -> float:
    squared = compensated_sum(amplitudes ** 2)
    return math.sqrt(_time_integral(squared * weight(nodes), weights))


def _time_integral(values: np.ndarray, weights: np.ndarray) -> float:
    if not np.all(np.isfinite(values)):
        raise QuadratureError("Time integrand of the norm is not finite")
    return math.fsum(weights * values)
