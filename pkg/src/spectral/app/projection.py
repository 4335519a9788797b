"""Projection of spatial data and spatio-temporal sources onto the eigenfunctions."""

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from shared.exceptions.numerical_error import QuadratureError
from shared.exceptions.source_error import SourceError
from shared.exceptions.validation_error import ValidationError
from solvers.domain.source_term import SourceTerm
from spectral.domain.spectrum_provider import SpectrumProvider, check_mode_count
from spectral.app.summation import compensated_sum

SpatialFunction = Callable[[np.ndarray], np.ndarray]
SpatialData = SpatialFunction | Sequence[float] | np.ndarray | None


def project(g: SpatialFunction, n_modes: int, provider: SpectrumProvider) -> np.ndarray:
    """
    Coefficients (g, e_xi)_H for xi = 1..n_modes.

    Args:
        g: Vectorised function of x
        n_modes: Number of modes N >= 1
        provider: Spectrum supplying eigenfunctions and the spatial quadrature

    Returns:
        Array of N coefficients

    Raises:
        SourceError: If g fails to evaluate
        QuadratureError: If g is not finite at the quadrature nodes
    """
    check_mode_count(n_modes)
    nodes, weights = provider.quadrature(n_modes)
    try:
        values = np.broadcast_to(np.asarray(g(nodes), dtype=float), nodes.shape)
    except Exception as e:
        raise SourceError(f"Spatial function failed to evaluate: {str(e)}")
    if not np.all(np.isfinite(values)):
        raise QuadratureError("Spatial function is not finite at the quadrature nodes")
    basis = _basis_matrix(provider, n_modes, nodes)
    return compensated_sum((basis * (weights * values)).T)


def coefficients(data: SpatialData, n_modes: int, provider: SpectrumProvider) -> np.ndarray:
    """
    Mode coefficients of spatial data given as a function, a coefficient vector or None (zero).

    Raises:
        ValidationError: If a coefficient vector is shorter than n_modes (E-DATA)
    """
    check_mode_count(n_modes)
    if data is None:
        return np.zeros(n_modes)
    if callable(data):
        return project(data, n_modes, provider)
    vector = np.asarray(data, dtype=float)
    if vector.ndim != 1 or vector.size < n_modes:
        raise ValidationError(f"Expected at least {n_modes} coefficients, got shape {vector.shape}", code="E-DATA")
    if not np.all(np.isfinite(vector[:n_modes])):
        raise ValidationError("Coefficients must be finite", code="E-DATA")
    return vector[:n_modes].copy()


@dataclass(frozen=True)
class SeparableSource:
    """f(t, x) = sum_i g_i(t) h_i(x), each h_i projected once."""

    terms: tuple[tuple[SourceTerm, SpatialFunction], ...]

    def mode_sources(self, n_modes: int, provider: SpectrumProvider) -> list[SourceTerm]:
        projections = [project(h, n_modes, provider) for _, h in self.terms]
        return [
            SourceTerm.combination(
                [(float(proj[xi]), g) for (g, _), proj in zip(self.terms, projections)],
                tag="separable",
            )
            for xi in range(n_modes)
        ]


@dataclass(frozen=True)
class FieldSource:
    """f given as a callable fn(t, x), broadcasting over t[..., None] and x, projected at each time."""

    fn: Callable[[np.ndarray, np.ndarray], np.ndarray]
    singular_exponent: float = 0.0

    def mode_sources(self, n_modes: int, provider: SpectrumProvider) -> list[SourceTerm]:
        check_mode_count(n_modes)
        nodes, weights = provider.quadrature(n_modes)
        weighted_basis = _basis_matrix(provider, n_modes, nodes) * weights

        def projector(row: np.ndarray) -> Callable[[np.ndarray], np.ndarray]:
            def evaluate(t: np.ndarray) -> np.ndarray:
                times = np.asarray(t, dtype=float)
                field = np.asarray(self.fn(times[..., None], nodes), dtype=float)
                return np.broadcast_to(field, times.shape + nodes.shape) @ row

            return evaluate

        return [
            SourceTerm.projected(projector(weighted_basis[xi]), tag="field", singular_exponent=self.singular_exponent)
            for xi in range(n_modes)
        ]


SpatioTemporalSource = SeparableSource | FieldSource


def mode_sources(f: SpatioTemporalSource | None, n_modes: int, provider: SpectrumProvider) -> list[SourceTerm]:
    """Per-mode sources f_xi(t) = (f(t), e_xi)_H; zero for f = None."""
    if f is None:
        return [SourceTerm.zero() for _ in range(n_modes)]
    return f.mode_sources(n_modes, provider)


def _basis_matrix(provider: SpectrumProvider, n_modes: int, nodes: np.ndarray) -> np.ndarray:
    return np.stack([provider.eigenfunction(xi, nodes) for xi in range(1, n_modes + 1)])
