import math
from functools import lru_cache

import numpy as np

from shared.exceptions.validation_error import ValidationError
from spectral.domain.spectrum_provider import SpectrumProvider, check_mode_count

NODES_PER_PANEL = 8
MIN_PANELS = 8


@lru_cache(maxsize=32)
def _composite_legendre(length: float, panels: int) -> tuple[np.ndarray, np.ndarray]:
    reference, reference_weights = np.polynomial.legendre.leggauss(NODES_PER_PANEL)
    width = length / panels
    left = np.arange(panels)[:, None] * width
    nodes = (left + width * (reference[None, :] + 1.0) / 2.0).ravel()
    weights = np.tile(reference_weights * width / 2.0, panels)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


class DirichletLaplacian(SpectrumProvider):
    """A = -d2/dx2 on (0, L) with u(0) = u(L) = 0.

    m_xi = (xi pi / L)**2 and e_xi(x) = sqrt(2/L) sin(xi pi x / L).
    """

    def __init__(self, length: float = math.pi):
        """
        Initialize the provider.

        Args:
            length: Length L of the interval, default pi
        """
        if not math.isfinite(length) or not length > 0:
            raise ValidationError(f"Interval length must be positive, got {length}", code="E-OPERATOR")
        self._length = float(length)

    @property
    def length(self) -> float:
        return self._length

    @property
    def domain(self) -> tuple[float, float]:
        return (0.0, self._length)

    def eigenvalue(self, xi: int) -> float:
        check_mode_count(xi)
        return (xi * math.pi / self._length) ** 2

    def eigenfunction(self, xi: int, x) -> np.ndarray:
        check_mode_count(xi)
        points = np.asarray(x, dtype=float)
        return math.sqrt(2.0 / self._length) * np.sin(xi * math.pi * points / self._length)

    def quadrature(self, n_modes: int) -> tuple[np.ndarray, np.ndarray]:
        """Composite 8-point Gauss-Legendre rule on max(8, n_modes) equal panels."""
        check_mode_count(n_modes)
        return _composite_legendre(self._length, max(MIN_PANELS, int(n_modes)))

    def __repr__(self) -> str:
        return f"DirichletLaplacian(length={self._length!r})"
