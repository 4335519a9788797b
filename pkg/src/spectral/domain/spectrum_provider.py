import math
from abc import ABC, abstractmethod

import numpy as np

from shared.exceptions.validation_error import ValidationError


class SpectrumProvider(ABC):
    """Interface for a self-adjoint operator A with positive discrete spectrum.

    Eigenvalues m_1 <= m_2 <= ... are bounded away from zero and the eigenfunctions
    e_xi form an orthonormal basis of H. Modes are indexed from 1.
    """

    @property
    @abstractmethod
    def domain(self) -> tuple[float, float]:
        """Spatial interval the eigenfunctions live on."""
        pass

    @abstractmethod
    def eigenvalue(self, xi: int) -> float:
        """
        Eigenvalue m_xi of mode xi.

        Raises:
            ValidationError: If the mode is not available
        """
        pass

    @abstractmethod
    def eigenfunction(self, xi: int, x) -> np.ndarray:
        """Values of e_xi at the points x."""
        pass

    @abstractmethod
    def quadrature(self, n_modes: int) -> tuple[np.ndarray, np.ndarray]:
        """
        Spatial quadrature rule resolving the first n_modes eigenfunctions.

        Returns:
            (nodes, weights) on the domain
        """
        pass

    def eigenvalues(self, n_modes: int) -> np.ndarray:
        check_mode_count(n_modes)
        return np.array([self.eigenvalue(xi) for xi in range(1, n_modes + 1)])

    def inner_product(self, values: np.ndarray, xi: int, n_modes: int) -> float:
        """(g, e_xi)_H for g sampled at the nodes of quadrature(n_modes)."""
        nodes, weights = self.quadrature(n_modes)
        return math.fsum(weights * values * self.eigenfunction(xi, nodes))


def check_mode_count(n_modes: int) -> None:
    if isinstance(n_modes, bool) or int(n_modes) != n_modes or n_modes < 1:
        raise ValidationError(f"Number of modes must be a positive integer, got {n_modes}", code="E-MODES")
