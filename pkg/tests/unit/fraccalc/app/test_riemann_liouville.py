import math

import numpy as np
import pytest

from fraccalc.app.riemann_liouville import (
    rl_derivative2_num,
    rl_derivative2_profile,
    rl_derivative_num,
    rl_derivative_profile,
    rl_integral_num,
    rl_integral_profile,
)
from fraccalc.domain.sampled_function import SampledFunction
from fraccalc.domain.uniform_grid import UniformGrid
from shared.exceptions.numerical_error import NearBoundaryError
from shared.exceptions.validation_error import DomainError
from special.app.mittag_leffler import mittag_leffler


@pytest.fixture
def fine_grid():
    return UniformGrid(t_end=1.0, n=1000)


@pytest.fixture
def linear(fine_grid):
    return SampledFunction.from_callable(fine_grid, lambda t: t)


class TestIntegral:
    """Test cases for the fractional integral."""

    @pytest.mark.parametrize("beta", [0.25, 0.5, 1.0])
    def test_should_integrate_linear_function_exactly(self, linear, beta):
        """Test I**beta t = t**(1 + beta) / Gamma(2 + beta)."""
        t = linear.grid.node(700)
        expected = t ** (1.0 + beta) / math.gamma(2.0 + beta)
        assert rl_integral_num(linear, beta, 700) == pytest.approx(expected, rel=1e-12)

    def test_should_match_scalar_calls_in_profile(self, linear):
        """Test that the profile equals the node-by-node integral."""
        profile = rl_integral_profile(linear, 0.4)
        for index in (1, 17, 500, 1000):
            assert profile[index] == pytest.approx(rl_integral_num(linear, 0.4, index), rel=1e-12)

    def test_should_return_samples_for_zero_order(self, linear):
        """Test that I**0 is the identity."""
        np.testing.assert_array_equal(rl_integral_profile(linear, 0.0), linear.values)

    def test_should_integrate_declared_singularity(self):
        """Test I**beta t**p = Gamma(p + 1) / Gamma(p + 1 + beta) t**(p + beta) for p = -0.5."""
        grid = UniformGrid(t_end=1.0, n=200)
        sampled = SampledFunction.from_callable(grid, lambda t: t ** -0.5, singular_exponent=-0.5)
        expected = math.gamma(0.5) / math.gamma(1.0) * grid.node(150) ** 0.0
        assert rl_integral_num(sampled, 0.5, 150) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("beta", [0.0, 1.5, -0.2])
    def test_should_raise_error_when_order_is_outside_range(self, linear, beta):
        """Test that the scalar integral needs 0 < beta <= 1."""
        with pytest.raises(DomainError):
            rl_integral_num(linear, beta, 10)


class TestFirstOrderDerivative:
    """Test cases for D**gamma with 0 < gamma <= 1."""

    def test_should_differentiate_power(self, fine_grid):
        """Test D**gamma t**2 = 2 t**(2 - gamma) / Gamma(3 - gamma)."""
        gamma = 0.4
        sampled = SampledFunction.from_callable(fine_grid, lambda t: t ** 2)
        t = fine_grid.node(600)
        expected = 2.0 * t ** (2.0 - gamma) / math.gamma(3.0 - gamma)
        assert rl_derivative_num(sampled, gamma, 600) == pytest.approx(expected, rel=1e-3)

    def test_should_match_scalar_calls_in_profile(self, fine_grid):
        """Test that the profile uses the same stencils, nan near t = 0."""
        sampled = SampledFunction.from_callable(fine_grid, np.sin)
        profile = rl_derivative_profile(sampled, 0.7)
        assert np.isnan(profile[:2]).all()
        for index in (2, 333, 1000):
            assert profile[index] == pytest.approx(rl_derivative_num(sampled, 0.7, index), rel=1e-10)

    def test_should_raise_error_when_stencil_reaches_origin(self, linear):
        """Test NearBoundary at the first node."""
        with pytest.raises(NearBoundaryError):
            rl_derivative_num(linear, 0.5, 1)


class TestSecondOrderDerivative:
    """Test cases for D**alpha with 1 < alpha <= 2."""

    @pytest.mark.parametrize("alpha", [1.25, 1.5, 1.75])
    def test_should_differentiate_power(self, fine_grid, alpha):
        """Test D**alpha t**2 = 2 t**(2 - alpha) / Gamma(3 - alpha) within max(10 h, 1e-3)."""
        sampled = SampledFunction.from_callable(fine_grid, lambda t: t ** 2)
        profile = rl_derivative2_profile(sampled, alpha)
        nodes = fine_grid.nodes
        window = nodes >= 0.05
        expected = 2.0 * nodes[window] ** (2.0 - alpha) / math.gamma(3.0 - alpha)
        error = np.max(np.abs(profile[window] - expected))
        assert error < max(10.0 * fine_grid.h, 1e-3)

    def test_should_reduce_to_second_derivative_for_alpha_two(self, fine_grid):
        """Test that D**2 sin = -sin."""
        sampled = SampledFunction.from_callable(fine_grid, np.sin)
        assert rl_derivative2_num(sampled, 2.0, 500) == pytest.approx(-math.sin(0.5), rel=1e-5)

    def test_should_use_one_sided_stencil_at_horizon(self, fine_grid):
        """Test the last node."""
        sampled = SampledFunction.from_callable(fine_grid, lambda t: t ** 2)
        assert rl_derivative2_num(sampled, 2.0, fine_grid.n) == pytest.approx(2.0, rel=1e-8)

    def test_should_raise_error_when_alpha_is_outside_range(self, linear):
        """Test that alpha must lie in (1, 2]."""
        with pytest.raises(DomainError) as exc_info:
            rl_derivative2_profile(linear, 1.0)
        assert exc_info.value.code == "E-ALPHA-RANGE"

    def test_should_raise_error_when_stencil_reaches_origin(self, linear):
        """Test NearBoundary for the second difference at node 1."""
        with pytest.raises(NearBoundaryError):
            rl_derivative2_num(linear, 1.5, 1)


IDENTITY_ALPHAS = [1.25, 1.5, 1.75, 2.0]
IDENTITY_MS = [-2.0, -1.0, 1.0]
IDENTITY_NU = 0.4
IDENTITY_GAMMA = 0.6
WINDOW_START = 0.05


def _ml_kernel(alpha, m, nu):
    """t -> t**(nu - 1) E_{alpha,nu}(m t**alpha)."""
    return lambda t: t ** (nu - 1.0) * mittag_leffler(alpha, nu, m * t ** alpha)


def _identity_error(identity, alpha, m, n):
    """Sup-error of a numeric operator identity on [0.05, 1] with n intervals."""
    grid = UniformGrid(t_end=1.0, n=n)
    singular = alpha < 2.0
    if identity == "integral":
        sampled = SampledFunction.from_callable(
            grid, _ml_kernel(alpha, m, alpha), alpha - 1.0 if singular else None
        )
        numeric = rl_integral_profile(sampled, IDENTITY_NU)
        target = _ml_kernel(alpha, m, alpha + IDENTITY_NU)
    elif identity == "derivative":
        sampled = SampledFunction.from_callable(
            grid, _ml_kernel(alpha, m, alpha), alpha - 1.0 if singular else None
        )
        numeric = rl_derivative_profile(sampled, IDENTITY_GAMMA)
        target = _ml_kernel(alpha, m, alpha - IDENTITY_GAMMA)
    else:
        sampled = SampledFunction.from_callable(
            grid, _ml_kernel(alpha, m, alpha - 1.0), alpha - 2.0 if singular else None
        )
        numeric = rl_derivative_profile(sampled, alpha - 1.0)
        target = lambda t: m * _ml_kernel(alpha, m, alpha)(t)
    nodes = grid.nodes
    window = nodes >= WINDOW_START
    return float(np.max(np.abs(numeric[window] - target(nodes[window]))))


class TestOperatorIdentities:
    """Test cases for the numeric operators against Mittag-Leffler closed forms."""

    @pytest.mark.parametrize("identity", ["integral", "derivative", "critical"])
    @pytest.mark.parametrize("alpha", IDENTITY_ALPHAS)
    @pytest.mark.parametrize("m", IDENTITY_MS)
    def test_should_match_closed_form_and_converge(self, identity, alpha, m):
        """Test I**nu, D**gamma and the critical D**(alpha-1) of Mittag-Leffler kernels.

        I**nu t**(a-1) E_{a,a}(m t**a) = t**(a+nu-1) E_{a,a+nu}(m t**a),
        D**gamma t**(a-1) E_{a,a}(m t**a) = t**(a-gamma-1) E_{a,a-gamma}(m t**a),
        D**(a-1) t**(a-2) E_{a,a-1}(m t**a) = m t**(a-1) E_{a,a}(m t**a).
        """
        h = 1e-3
        coarse = _identity_error(identity, alpha, m, 1000)
        fine = _identity_error(identity, alpha, m, 2000)
        assert coarse < max(10.0 * h, 1e-3)
        assert coarse / fine >= 1.8

    def test_should_agree_with_beta_zero_form_in_critical_case(self):
        """Test m t**(alpha-1) E_{alpha,alpha}(m t**alpha) = E_{alpha,0}(m t**alpha) / t."""
        alpha, m = 1.5, -1.0
        t = np.linspace(WINDOW_START, 1.0, 20)
        expected = mittag_leffler(alpha, 0.0, m * t ** alpha) / t
        np.testing.assert_allclose(m * _ml_kernel(alpha, m, alpha)(t), expected, rtol=1e-12)


class TestSemigroup:
    """Test cases for I**b2 I**b1 = I**(b1 + b2)."""

    @pytest.mark.parametrize("beta1,beta2", [(0.3, 0.4), (0.5, 0.5), (0.2, 0.25)])
    def test_should_compose_fractional_integrals(self, beta1, beta2):
        """Test the composition against the direct integral at two resolutions."""
        differences = []
        for n in (500, 1000):
            grid = UniformGrid(t_end=1.0, n=n)
            linear = SampledFunction.from_callable(grid, lambda t: t)
            inner = SampledFunction(grid=grid, values=rl_integral_profile(linear, beta1))
            composed = rl_integral_profile(inner, beta2)
            direct = rl_integral_profile(linear, beta1 + beta2)
            differences.append(float(np.max(np.abs(composed - direct))))
        assert differences[0] < 1e-4
        assert differences[1] < differences[0]
