import numpy as np
import pytest

from shared.exceptions.validation_error import DomainError
from solvers.app.cauchy import solve_cauchy
from solvers.app.functionals import (
    condition_functionals,
    critical_derivative,
    critical_derivative_via_beta_zero,
    dgamma_of_solution,
    ibeta_of_solution,
    initial_functionals,
)
from solvers.domain.problem_specs import CauchySpec
from solvers.domain.scalar_solution import ScalarSolution
from solvers.domain.source_term import SourceTerm


class TestSolutionFunctionals:
    """Test cases for I**beta u and D**gamma u in closed form."""

    def test_should_return_identity_for_zero_order_integral(self, classical_eq):
        """Test I**0 cos = cos."""
        sol = ScalarSolution(eq=classical_eq, c1=0.0, c2=1.0)
        times = np.linspace(0.2, 3.0, 5)
        np.testing.assert_allclose(ibeta_of_solution(sol, 0.0, times), np.cos(times), atol=1e-10)

    def test_should_differentiate_classical_solution(self, classical_eq):
        """Test D**1 cos = -sin through the critical kernel."""
        sol = ScalarSolution(eq=classical_eq, c1=0.0, c2=1.0)
        times = np.linspace(0.2, 3.0, 5)
        np.testing.assert_allclose(dgamma_of_solution(sol, 1.0, times), -np.sin(times), atol=1e-10)

    def test_should_agree_on_both_critical_derivative_paths(self, fractional_eq):
        """Test m t**(alpha-1) E_{alpha,alpha} = t**-1 E_{alpha,0}."""
        times = np.array([0.1, 0.5, 1.0])
        np.testing.assert_allclose(
            critical_derivative(fractional_eq, times),
            critical_derivative_via_beta_zero(fractional_eq, times),
            rtol=1e-9,
        )

    def test_should_raise_error_when_integral_order_is_outside_range(self, fractional_eq):
        """Test that beta must lie in [0, 1]."""
        sol = ScalarSolution(eq=fractional_eq, c1=1.0, c2=0.0)
        with pytest.raises(DomainError):
            ibeta_of_solution(sol, 1.5, 0.5)

    def test_should_raise_error_when_derivative_order_is_outside_range(self, fractional_eq):
        """Test that gamma must lie in (0, alpha - 1]."""
        sol = ScalarSolution(eq=fractional_eq, c1=1.0, c2=0.0)
        with pytest.raises(DomainError) as exc_info:
            dgamma_of_solution(sol, 0.7, 0.5)
        assert exc_info.value.code == "E-GAMMA-RANGE"


class TestInitialFunctionals:
    """Test cases for the t -> 0 limits of the Cauchy functionals."""

    def test_should_reproduce_classical_initial_data(self, classical_eq):
        """Test (u(0), u'(0)) of 2 sin t + 3 cos t."""
        sol = ScalarSolution(eq=classical_eq, c1=2.0, c2=3.0)
        first, second = initial_functionals(sol, 0.0)
        assert first == pytest.approx(3.0, abs=1e-6)
        assert second == pytest.approx(2.0, abs=1e-6)

    def test_should_reproduce_fractional_initial_data_with_source(self, fractional_eq):
        """Test that the solved Cauchy problem returns its own data."""
        spec = CauchySpec(
            eq=fractional_eq, beta=0.3, gamma=0.5, c1_hat=0.7, c2_hat=-0.4, source=SourceTerm.constant(1.0)
        )
        first, second = initial_functionals(solve_cauchy(spec), spec.beta)
        assert first == pytest.approx(0.7, abs=1e-4)
        assert second == pytest.approx(-0.4, abs=1e-4)


class TestConditionFunctionals:
    """Test cases for the pair evaluated at the condition points."""

    def test_should_evaluate_classical_conditions(self, classical_eq):
        """Test (u(a), u'(b)) for u = sin t."""
        sol = ScalarSolution(eq=classical_eq, c1=1.0, c2=0.0)
        value, slope = condition_functionals(sol, 0.0, 1.0, 0.5, 1.0)
        assert value == pytest.approx(np.sin(0.5), abs=1e-10)
        assert slope == pytest.approx(np.cos(1.0), abs=1e-10)
