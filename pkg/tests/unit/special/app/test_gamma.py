import math

import numpy as np
import pytest

from special.app.gamma import recip_gamma


class TestRecipGamma:
    """Test cases for the reciprocal gamma function."""

    @pytest.mark.parametrize("pole", [0.0, -1.0, -2.0, -7.0])
    def test_should_vanish_at_poles(self, pole):
        """Test that 1/Gamma is exactly zero at non-positive integers."""
        assert recip_gamma(pole) == 0.0

    @pytest.mark.parametrize("x", [0.5, 1.0, 2.5, -0.5, 6.0])
    def test_should_match_math_gamma_elsewhere(self, x):
        """Test values away from the poles."""
        assert recip_gamma(x) == pytest.approx(1.0 / math.gamma(x), rel=1e-14)

    def test_should_keep_array_shape(self):
        """Test vectorised evaluation."""
        values = recip_gamma(np.array([[1.0, 0.0], [3.0, -1.0]]))
        assert values.shape == (2, 2)
        np.testing.assert_allclose(values, [[1.0, 0.0], [0.5, 0.0]], rtol=1e-14)

    def test_should_return_float_for_scalar(self):
        """Test that scalar input gives a plain float."""
        assert isinstance(recip_gamma(2), float)
