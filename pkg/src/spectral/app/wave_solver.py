"""Eigenfunction-expansion solver for D**alpha u + A u = f with per-mode scalar solves."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

import numpy as np

from fraccalc.domain.uniform_grid import UniformGrid
from shared.exceptions.degenerate_system_error import DegenerateModeError, DegenerateSystemError
from shared.exceptions.validation_error import ValidationError
from shared.settings import NumericalSettings
from solvers.app.cauchy import solve_cauchy
from solvers.app.conditions import solve_conditions
from solvers.app.kernels import evaluate_solution
from solvers.app.verification import residual_report
from solvers.domain.equation_params import EquationParams
from solvers.domain.problem_specs import CauchySpec, InnerBoundarySpec, InnerSpec, ProblemFamily
from solvers.domain.residual_report import ResidualReport
from solvers.domain.scalar_solution import ScalarSolution
from spectral.app.projection import SpatialData, SpatioTemporalSource, coefficients, mode_sources
from spectral.app.summation import compensated_sum
from spectral.domain.mode_data import ModeData
from spectral.domain.series_solution import PdeParams, SeriesSolution
from spectral.domain.spectrum_provider import SpectrumProvider, check_mode_count
from spectral.infra.dirichlet_laplacian import DirichletLaplacian

logger = logging.getLogger(__name__)

Item = TypeVar("Item")
Result = TypeVar("Result")


class SpectralWaveSolver:
    """Solves the abstract time-fractional wave equation mode by mode."""

    def __init__(self, provider: SpectrumProvider | None = None, settings: NumericalSettings | None = None):
        """
        Initialize the solver.

        Args:
            provider: Optional SpectrumProvider implementation.
                      If not provided, uses DirichletLaplacian on (0, pi) by default.
            settings: Numerical settings; defaults are read from the environment
        """
        self._provider = provider or DirichletLaplacian()
        self._settings = settings or NumericalSettings.from_env()

    @property
    def provider(self) -> SpectrumProvider:
        return self._provider

    def solve(
        self,
        params: PdeParams,
        n_modes: int,
        u1: SpatialData = None,
        u2: SpatialData = None,
        f: SpatioTemporalSource | None = None,
    ) -> SeriesSolution:
        """
        Solve the problem of the given family truncated to n_modes modes.

        u1 and u2 are the family's two condition values as spatial functions or coefficient
        vectors; mode xi is solved with m = -m_xi.

        Args:
            params: Family, orders, condition points and horizon
            n_modes: Truncation N >= 1
            u1: First condition data
            u2: Second condition data
            f: Optional spatio-temporal source

        Returns:
            The SeriesSolution with one scalar solution per mode

        Raises:
            DegenerateModeError: If the condition system of any retained mode is degenerate
        """
        check_mode_count(n_modes)
        eigenvalues = self._provider.eigenvalues(n_modes)
        first = coefficients(u1, n_modes, self._provider)
        second = coefficients(u2, n_modes, self._provider)
        sources = mode_sources(f, n_modes, self._provider)
        modes = [
            ModeData(xi=index + 1, m_xi=float(m_xi), u1_coef=float(c1), u2_coef=float(c2), f_coef=source)
            for index, (m_xi, c1, c2, source) in enumerate(zip(eigenvalues, first, second, sources))
        ]
        solutions = self._map(lambda mode: _solve_mode(params, mode, self._settings), modes)
        series = SeriesSolution(params=params, modes=tuple(zip(modes, solutions)), provider=self._provider)
        logger.info(
            "%s problem solved on %d modes (tail indicator %.3e)", params.family.value, n_modes, series.tail_indicator
        )
        return series

    def mode_amplitudes(self, s: SeriesSolution, t) -> np.ndarray:
        """
        u_xi(t) for every mode.

        Returns:
            Array of shape (N, len(t))
        """
        times = np.atleast_1d(np.asarray(t, dtype=float))
        rows = self._map(lambda pair: np.asarray(evaluate_solution(pair[1], times, self._settings.quad_n)), s.modes)
        return np.array(rows).reshape(s.n_modes, times.size)

    def eval_series(self, s: SeriesSolution, t, x):
        """
        u(t, x) = sum_xi u_xi(t) e_xi(x).

        Returns:
            A float for scalar t and x, otherwise an array of shape (len(t), len(x))

        Raises:
            SingularAtZeroError: If t = 0, alpha < 2 and some mode has C2 != 0
        """
        scalar = np.ndim(t) == 0 and np.ndim(x) == 0
        points = np.atleast_1d(np.asarray(x, dtype=float))
        amplitudes = self.mode_amplitudes(s, t)
        shapes = np.stack([s.provider.eigenfunction(data.xi, points) for data, _ in s.modes])
        field = compensated_sum(amplitudes[:, :, None] * shapes[:, None, :])
        return float(field[0, 0]) if scalar else field

    def mode_residual_reports(self, s: SeriesSolution, grid_n: int | None = None) -> list[ResidualReport]:
        """Residual report of every mode's scalar solution on a uniform grid over [0, T]."""
        grid = UniformGrid(t_end=s.params.t_end, n=grid_n or self._settings.grid_n)
        return self._map(lambda pair: residual_report(pair[1], grid, settings=self._settings), s.modes)

    def _map(self, fn: Callable[[Item], Result], items: Iterable[Item]) -> list[Result]:
        with ThreadPoolExecutor(max_workers=self._settings.max_workers) as executor:
            return list(executor.map(fn, items))


def _solve_mode(params: PdeParams, mode: ModeData, settings: NumericalSettings) -> ScalarSolution:
    eq = EquationParams(alpha=params.alpha, m=-mode.m_xi, t_end=params.t_end)
    if params.family is ProblemFamily.CAUCHY:
        spec = CauchySpec(eq, params.beta, params.gamma, mode.u1_coef, mode.u2_coef, mode.f_coef)
        return solve_cauchy(spec)
    if params.family is ProblemFamily.INNER:
        spec = InnerSpec(eq, params.beta, params.gamma, params.a, mode.u1_coef, mode.u2_coef, mode.f_coef)
    else:
        spec = InnerBoundarySpec(eq, params.beta, params.gamma, params.a, params.b, mode.u1_coef, mode.u2_coef, mode.f_coef)
    try:
        return solve_conditions(spec, settings)[0]
    except DegenerateSystemError as e:
        logger.warning("Mode %d is degenerate: %s", mode.xi, str(e))
        raise DegenerateModeError(mode.xi, e.report) from e


def solve_pde(
    family: ProblemFamily | str,
    data: tuple[SpatialData, SpatialData, SpatioTemporalSource | None],
    params: PdeParams,
    n_modes: int,
    sp: SpectrumProvider | None = None,
    settings: NumericalSettings | None = None,
) -> SeriesSolution:
    """
    Solve D**alpha u + A u = f with the conditions of ``family``.

    Raises:
        ValidationError: If ``family`` disagrees with ``params.family``
        DegenerateModeError: If any retained mode is degenerate
    """
    family = family if isinstance(family, ProblemFamily) else ProblemFamily.from_string(family)
    if family is not params.family:
        raise ValidationError(f"Family {family.value} does not match parameters for {params.family.value}", code="E-FAMILY")
    u1, u2, f = data
    return SpectralWaveSolver(sp, settings).solve(params, n_modes, u1, u2, f)


def eval_series(s: SeriesSolution, t, x, settings: NumericalSettings | None = None):
    """u(t, x) of a series solution; see SpectralWaveSolver.eval_series."""
    return SpectralWaveSolver(s.provider, settings).eval_series(s, t, x)


def mode_amplitudes(s: SeriesSolution, t, settings: NumericalSettings | None = None) -> np.ndarray:
    """N x len(t) array of u_xi(t)."""
    return SpectralWaveSolver(s.provider, settings).mode_amplitudes(s, t)


def mode_residual_reports(s: SeriesSolution, grid_n: int | None = None, settings: NumericalSettings | None = None) -> list[ResidualReport]:
    """Per-mode residual reports; see SpectralWaveSolver.mode_residual_reports."""
    return SpectralWaveSolver(s.provider, settings).mode_residual_reports(s, grid_n)
