import numpy as np
import pytest

from shared.exceptions.validation_error import ValidationError
from spectral.infra.tabulated_spectrum import TabulatedSpectrum


@pytest.fixture
def table(dirichlet):
    """Fixture providing the first two Dirichlet modes as a table."""
    nodes, weights = dirichlet.quadrature(2)
    return {
        "eigenvalues": [1.0, 4.0],
        "eigenfunctions": np.stack([dirichlet.eigenfunction(xi, nodes) for xi in (1, 2)]),
        "nodes": nodes,
        "weights": weights,
        "domain": dirichlet.domain,
    }


class TestTabulatedSpectrum:
    """Test cases for a user-supplied spectrum."""

    def test_should_expose_tabulated_modes(self, table):
        """Test eigenvalues, quadrature and the orthonormality defect."""
        spectrum = TabulatedSpectrum(**table)
        assert spectrum.available_modes == 2
        assert spectrum.eigenvalue(2) == 4.0
        assert spectrum.orthonormality_defect() < 1e-12
        np.testing.assert_array_equal(spectrum.quadrature(1)[0], table["nodes"])

    def test_should_interpolate_eigenfunctions_between_nodes(self, table, dirichlet):
        """Test linear interpolation off the nodes."""
        spectrum = TabulatedSpectrum(**table)
        assert spectrum.eigenfunction(1, 1.0) == pytest.approx(float(dirichlet.eigenfunction(1, 1.0)), rel=5e-3)

    def test_should_raise_error_when_mode_is_not_tabulated(self, table):
        """Test that only tabulated modes are available."""
        spectrum = TabulatedSpectrum(**table)
        with pytest.raises(ValidationError) as exc_info:
            spectrum.eigenvalue(3)
        assert exc_info.value.code == "E-MODES"

    @pytest.mark.parametrize(
        "field,value",
        [("eigenvalues", [4.0, 1.0]), ("eigenvalues", [0.0, 1.0]), ("domain", (1.0, 2.0)), ("eigenfunctions", np.zeros((3, 4)))],
    )
    def test_should_raise_error_for_inconsistent_table(self, table, field, value):
        """Test ordering, positivity, domain and shape checks."""
        table[field] = value
        with pytest.raises(ValidationError) as exc_info:
            TabulatedSpectrum(**table)
        assert exc_info.value.code == "E-OPERATOR"
