import math
from unittest.mock import Mock

import numpy as np
import pytest

from shared.exceptions.degenerate_system_error import DegenerateModeError
from shared.exceptions.validation_error import ValidationError
from shared.settings import NumericalSettings
from solvers.domain.problem_specs import ProblemFamily
from solvers.domain.source_term import SourceTerm
from spectral.app.projection import SeparableSource
from spectral.app.wave_solver import SpectralWaveSolver, eval_series, mode_amplitudes, solve_pde
from spectral.domain.series_solution import PdeParams
from spectral.domain.spectrum_provider import SpectrumProvider


@pytest.fixture
def settings():
    return NumericalSettings(max_workers=2)


@pytest.fixture
def classical_params():
    """Fixture providing the wave equation u_tt - u_xx = f with Cauchy data."""
    return PdeParams(family=ProblemFamily.CAUCHY, alpha=2.0, beta=0.0, gamma=1.0, t_end=math.pi)


class TestSpectralWaveSolver:
    """Test cases for the mode-by-mode solver."""

    def test_should_solve_single_mode_standing_wave(self, dirichlet, classical_params, settings):
        """Test u = cos t e_1(x) for u(0) = e_1, u_t(0) = 0."""
        solver = SpectralWaveSolver(dirichlet, settings)
        series = solver.solve(classical_params, 1, u1=[1.0])
        t, x = 1.2, 0.7
        expected = math.cos(t) * math.sqrt(2.0 / math.pi) * math.sin(x)
        assert solver.eval_series(series, t, x) == pytest.approx(expected, abs=1e-8)

    def test_should_decouple_modes(self, dirichlet, classical_params, settings):
        """Test that data on mode 3 only excite mode 3."""
        series = SpectralWaveSolver(dirichlet, settings).solve(classical_params, 3, u1=[0.0, 0.0, 1.0])
        times = np.linspace(0.1, 3.0, 6)
        amplitudes = mode_amplitudes(series, times, settings)
        np.testing.assert_array_equal(amplitudes[:2], np.zeros((2, 6)))
        np.testing.assert_allclose(amplitudes[2], np.cos(3.0 * times), atol=1e-8)

    def test_should_project_function_data_and_sources(self, dirichlet, classical_params, settings):
        """Test u_t(0) = e_2 with f = e_1, giving sin(2t)/2 e_2 + (1 - cos t) e_1."""
        e1 = lambda x: math.sqrt(2.0 / math.pi) * np.sin(x)
        e2 = lambda x: math.sqrt(2.0 / math.pi) * np.sin(2.0 * x)
        source = SeparableSource(((SourceTerm.constant(1.0), e1),))
        series = SpectralWaveSolver(dirichlet, settings).solve(classical_params, 2, u2=e2, f=source)
        times = np.array([0.5, 2.0])
        amplitudes = mode_amplitudes(series, times, settings)
        np.testing.assert_allclose(amplitudes[0], 1.0 - np.cos(times), atol=1e-8)
        np.testing.assert_allclose(amplitudes[1], np.sin(2.0 * times) / 2.0, atol=1e-8)

    def test_should_query_provider_once_for_eigenvalues(self, classical_params, settings):
        """Test the provider collaboration with a mock spectrum."""
        provider = Mock(spec=SpectrumProvider)
        provider.eigenvalues.return_value = np.array([1.0, 4.0])
        series = SpectralWaveSolver(provider, settings).solve(classical_params, 2, u1=[1.0, 0.0])
        provider.eigenvalues.assert_called_once_with(2)
        assert [data.m_xi for data, _ in series.modes] == [1.0, 4.0]
        assert series.provider is provider

    def test_should_raise_error_for_degenerate_mode(self, dirichlet, settings):
        """Test u(pi/2) = 1, u_t(pi) = 0 on mode 1."""
        params = PdeParams(
            family=ProblemFamily.INNER_BOUNDARY, alpha=2.0, beta=0.0, gamma=1.0, t_end=math.pi, a=math.pi / 2, b=math.pi
        )
        with pytest.raises(DegenerateModeError) as exc_info:
            SpectralWaveSolver(dirichlet, settings).solve(params, 1, u1=[1.0])
        assert exc_info.value.xi == 1
        assert exc_info.value.report is not None

    def test_should_pass_mode_residual_checks(self, dirichlet, classical_params, settings):
        """Test the per-mode residual reports."""
        solver = SpectralWaveSolver(dirichlet, settings)
        series = solver.solve(classical_params, 2, u1=[1.0, 0.5])
        reports = solver.mode_residual_reports(series, grid_n=1000)
        assert len(reports) == 2
        assert all(report.passed for report in reports)


class TestSolvePde:
    """Test cases for the functional entry points."""

    def test_should_solve_fractional_problem_by_family_name(self, dirichlet, settings):
        """Test solving with the family given as a string."""
        params = PdeParams(family=ProblemFamily.INNER, alpha=1.5, beta=0.3, gamma=0.4, t_end=1.0, a=0.5)
        series = solve_pde("inner", ([0.2, 0.1], [-0.1, 0.0], None), params, 2, dirichlet, settings)
        assert series.family is ProblemFamily.INNER
        assert series.n_modes == 2
        assert np.isfinite(eval_series(series, 0.5, np.array([0.3, 1.0]), settings)).all()

    def test_should_raise_error_when_family_mismatches(self, dirichlet, classical_params, settings):
        """Test that the family must agree with the parameters."""
        with pytest.raises(ValidationError) as exc_info:
            solve_pde("inner", (None, None, None), classical_params, 1, dirichlet, settings)
        assert exc_info.value.code == "E-FAMILY"
