import numpy as np

from shared.exceptions.validation_error import ValidationError
from spectral.domain.spectrum_provider import SpectrumProvider, check_mode_count


class TabulatedSpectrum(SpectrumProvider):
    """User-supplied spectrum: eigenvalues and eigenfunctions sampled on a fixed quadrature rule.

    Eigenfunctions are interpolated linearly between the nodes when evaluated elsewhere.
    """

    def __init__(self, eigenvalues, eigenfunctions, nodes, weights, domain: tuple[float, float]):
        """
        Initialize the provider.

        Args:
            eigenvalues: Positive, non-decreasing m_1..m_K
            eigenfunctions: Array of shape (K, len(nodes)) with e_xi at the nodes
            nodes: Strictly increasing quadrature nodes inside the domain
            weights: Positive quadrature weights
            domain: The spatial interval (left, right)

        Raises:
            ValidationError: If the table is inconsistent (E-OPERATOR)
        """
        self._eigenvalues = np.asarray(eigenvalues, dtype=float)
        self._eigenfunctions = np.asarray(eigenfunctions, dtype=float)
        self._nodes = np.asarray(nodes, dtype=float)
        self._weights = np.asarray(weights, dtype=float)
        self._domain = (float(domain[0]), float(domain[1]))
        self._validate()

    def _validate(self) -> None:
        count = self._eigenvalues.size
        if self._eigenvalues.ndim != 1 or count == 0:
            raise ValidationError("At least one eigenvalue is required", code="E-OPERATOR")
        if not np.all(np.isfinite(self._eigenvalues)) or np.any(self._eigenvalues <= 0):
            raise ValidationError("Eigenvalues must be finite and positive", code="E-OPERATOR")
        if np.any(np.diff(self._eigenvalues) < 0):
            raise ValidationError("Eigenvalues must be non-decreasing", code="E-OPERATOR")
        if self._nodes.ndim != 1 or self._nodes.shape != self._weights.shape or self._nodes.size < 2:
            raise ValidationError("Nodes and weights must be matching vectors", code="E-OPERATOR")
        if self._eigenfunctions.shape != (count, self._nodes.size):
            raise ValidationError(
                f"Eigenfunction table must have shape ({count}, {self._nodes.size}), "
                f"got {self._eigenfunctions.shape}",
                code="E-OPERATOR",
            )
        if np.any(np.diff(self._nodes) <= 0) or np.any(self._weights <= 0):
            raise ValidationError("Nodes must increase strictly and weights must be positive", code="E-OPERATOR")
        left, right = self._domain
        if not left < right or self._nodes[0] < left or self._nodes[-1] > right:
            raise ValidationError("Nodes must lie inside the domain", code="E-OPERATOR")

    @property
    def domain(self) -> tuple[float, float]:
        return self._domain

    @property
    def available_modes(self) -> int:
        return self._eigenvalues.size

    def eigenvalue(self, xi: int) -> float:
        self._check_available(xi)
        return float(self._eigenvalues[xi - 1])

    def eigenfunction(self, xi: int, x) -> np.ndarray:
        self._check_available(xi)
        return np.interp(np.asarray(x, dtype=float), self._nodes, self._eigenfunctions[xi - 1])

    def quadrature(self, n_modes: int) -> tuple[np.ndarray, np.ndarray]:
        self._check_available(n_modes)
        return self._nodes, self._weights

    def orthonormality_defect(self) -> float:
        """Max-norm distance of the discrete Gram matrix from the identity."""
        gram = (self._eigenfunctions * self._weights) @ self._eigenfunctions.T
        return float(np.max(np.abs(gram - np.eye(self.available_modes))))

    def _check_available(self, xi: int) -> None:
        check_mode_count(xi)
        if xi > self.available_modes:
            raise ValidationError(
                f"Mode {xi} requested but only {self.available_modes} are tabulated", code="E-MODES"
            )
