import math

import numpy as np
import pytest

from shared.exceptions.validation_error import ValidationError
from spectral.infra.dirichlet_laplacian import DirichletLaplacian


class TestDirichletLaplacianSpectrum:
    """Test cases for the Dirichlet Laplacian on an interval."""

    @pytest.mark.parametrize("length,xi,expected", [(math.pi, 1, 1.0), (math.pi, 3, 9.0), (2.0, 2, math.pi ** 2)])
    def test_should_return_eigenvalues(self, length, xi, expected):
        """Test m_xi = (xi pi / L)**2."""
        assert DirichletLaplacian(length).eigenvalue(xi) == pytest.approx(expected, rel=1e-14)

    def test_should_return_sorted_eigenvalue_vector(self, dirichlet):
        """Test the first n eigenvalues."""
        np.testing.assert_allclose(dirichlet.eigenvalues(4), [1.0, 4.0, 9.0, 16.0])

    def test_should_vanish_on_boundary(self, dirichlet):
        """Test e_xi(0) = e_xi(pi) = 0."""
        np.testing.assert_allclose(dirichlet.eigenfunction(2, [0.0, math.pi]), [0.0, 0.0], atol=1e-15)

    def test_should_be_orthonormal_under_quadrature(self, dirichlet):
        """Test that the discrete Gram matrix is the identity."""
        n_modes = 6
        nodes, weights = dirichlet.quadrature(n_modes)
        basis = np.stack([dirichlet.eigenfunction(xi, nodes) for xi in range(1, n_modes + 1)])
        gram = (basis * weights) @ basis.T
        np.testing.assert_allclose(gram, np.eye(n_modes), atol=1e-12)


class TestDirichletLaplacianErrors:
    """Test cases for invalid arguments."""

    @pytest.mark.parametrize("length", [0.0, -1.0, math.inf])
    def test_should_raise_error_for_invalid_length(self, length):
        """Test that L must be positive and finite."""
        with pytest.raises(ValidationError) as exc_info:
            DirichletLaplacian(length)
        assert exc_info.value.code == "E-OPERATOR"

    @pytest.mark.parametrize("xi", [0, -2, 1.5])
    def test_should_raise_error_for_invalid_mode(self, dirichlet, xi):
        """Test that modes are indexed from 1."""
        with pytest.raises(ValidationError) as exc_info:
            dirichlet.eigenvalue(xi)
        assert exc_info.value.code == "E-MODES"
