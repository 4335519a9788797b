"""Executes a validated RunConfig and writes its reports."""

import logging
import math
from typing import Callable

import numpy as np

from cli.domain.run_config import PdeProblem, ProblemKind, RunConfig, RunMode, ScalarSpec
from cli.domain.run_outcome import EXIT_OK, EXIT_VERIFICATION, RunOutcome
from cli.infra.config_loader import build_provider
from cli.infra.report_writer import ReportWriter
from fraccalc.domain.uniform_grid import UniformGrid
from shared.exceptions.degenerate_system_error import DegenerateModeError, DegenerateSystemError
from shared.exceptions.numerical_error import ZeroDataNormError
from shared.settings import NumericalSettings
from solvers.app.cauchy import solve_cauchy
from solvers.app.conditions import solve_conditions
from solvers.app.functionals import condition_functionals, dgamma_of_solution, ibeta_of_solution, initial_functionals
from solvers.app.kernels import evaluate_solution
from solvers.app.verification import residual_report
from solvers.domain.problem_specs import CauchySpec
from solvers.domain.scalar_solution import ScalarSolution
from special.app.mittag_leffler import ml
from spectral.app.norms import QUANTITIES, data_norms, stability_ratio
from spectral.app.projection import SeparableSource
from spectral.app.summation import compensated_sum
from spectral.app.wave_solver import SpectralWaveSolver
from spectral.domain.series_solution import SeriesSolution
from spectral.domain.spectrum_provider import SpectrumProvider

logger = logging.getLogger(__name__)

INITIAL_FUNCTIONAL_TOLERANCE = 1e-4
CONDITION_FUNCTIONAL_TOLERANCE = 1e-8


class RunPipeline:
    """Runs one configuration and records every report it writes."""

    def __init__(self, config: RunConfig, settings: NumericalSettings | None = None):
        """
        Initialize the pipeline.

        Args:
            config: A validated run configuration
            settings: Base numerical settings; the config's numerics override them.
                      If not provided, they are read from the environment
        """
        self._config = config
        self._settings = config.numerics.settings(settings or NumericalSettings.from_env())
        self._writer = ReportWriter(config.output.directory, config.output.prefix)
        self._files = []

    @property
    def settings(self) -> NumericalSettings:
        return self._settings

    def run(self) -> RunOutcome:
        """
        Execute the configured pipeline.

        Returns:
            RunOutcome with exit code 0, or 4 when a requested verification fails

        Raises:
            ValidationError: If the problem is invalid
            DegenerateSystemError: If a condition system is degenerate; its report is written first
            NumericalError: If an evaluation fails
        """
        mode = self._config.mode
        logger.info("Running %s", mode.value)
        if mode is RunMode.ML_EVAL:
            self._ml_eval()
            return self._outcome(EXIT_OK)
        if self._config.kind is ProblemKind.SCALAR:
            spec = self._config.scalar
            solution = self._solve_scalar(spec)
            self._write_scalar(spec, solution)
            if mode is RunMode.VERIFY:
                return self._verify_scalar(spec, solution)
            return self._outcome(EXIT_OK)
        problem = self._config.pde
        provider = build_provider(problem.operator)
        series = self._solve_pde(problem, provider)
        self._write_pde(series, provider)
        if mode is RunMode.VERIFY:
            return self._verify_pde(problem, series, provider)
        return self._outcome(EXIT_OK)

    def _ml_eval(self) -> None:
        query = self._config.query
        result = ml(query)
        record = {"alpha": query.alpha, "beta": query.beta, "z": query.z, **result.to_record()}
        self._files.append(self._writer.write_json("ml.json", record))

    def _solve_scalar(self, spec: ScalarSpec) -> ScalarSolution:
        if isinstance(spec, CauchySpec):
            return solve_cauchy(spec)
        try:
            solution, report = solve_conditions(spec, self._settings)
        except DegenerateSystemError as e:
            if e.report is not None:
                self._files.append(self._writer.write_json("conditions.json", e.report.to_record()))
            raise
        self._files.append(self._writer.write_json("conditions.json", report.to_record()))
        return solution

    def _write_scalar(self, spec: ScalarSpec, solution: ScalarSolution) -> None:
        record = solution.to_record()
        record.update(beta=spec.beta, gamma=spec.gamma)
        if not isinstance(spec, CauchySpec):
            record.update(a=spec.a, b=spec.b)
        self._files.append(self._writer.write_json("solution.json", record))

        times = self._sample_times()
        quad_n = self._settings.quad_n
        columns = (
            times,
            np.asarray(evaluate_solution(solution, times, quad_n)),
            np.asarray(ibeta_of_solution(solution, spec.beta, times, quad_n)),
            np.asarray(dgamma_of_solution(solution, spec.gamma, times, quad_n)),
        )
        self._files.append(self._writer.write_csv("samples.csv", ("t", "u", "I_beta_u", "D_gamma_u"), zip(*columns)))

    def _verify_scalar(self, spec: ScalarSpec, solution: ScalarSolution) -> RunOutcome:
        residual = residual_report(solution, self._grid(), self._config.numerics.t_min, self._settings)
        if isinstance(spec, CauchySpec):
            computed = initial_functionals(solution, spec.beta, self._settings.quad_n)
            targets = (spec.c1_hat, spec.c2_hat)
            tolerance = INITIAL_FUNCTIONAL_TOLERANCE
        else:
            computed = condition_functionals(solution, spec.beta, spec.gamma, spec.a, spec.b, self._settings.quad_n)
            targets = spec.data
            tolerance = CONDITION_FUNCTIONAL_TOLERANCE
        functionals = _functional_check(computed, targets, tolerance)
        passed = residual.passed and functionals["passed"]
        record = {
            "family": solution.family.value,
            "residual": residual.to_record(),
            "functionals": functionals,
            "passed": passed,
        }
        self._files.append(self._writer.write_json("verification.json", record))
        return self._verdict(passed, f"{solution.family.value} solution failed verification")

    def _solve_pde(self, problem: PdeProblem, provider: SpectrumProvider) -> SeriesSolution:
        solver = SpectralWaveSolver(provider, self._settings)
        try:
            return solver.solve(problem.params, problem.n_modes, problem.u1, problem.u2, _separable(problem, provider))
        except DegenerateModeError as e:
            record = {"xi": e.xi, "report": e.report.to_record() if e.report is not None else None}
            self._files.append(self._writer.write_json("conditions.json", record))
            raise

    def _write_pde(self, series: SeriesSolution, provider: SpectrumProvider) -> None:
        self._files.append(self._writer.write_json("solution.json", series.to_record()))
        times = self._sample_times()
        left, right = provider.domain
        points = np.linspace(left, right, self._config.numerics.x_samples)
        field = SpectralWaveSolver(provider, self._settings).eval_series(series, times, points)
        rows = ((t, x, field[i, j]) for i, t in enumerate(times) for j, x in enumerate(points))
        self._files.append(self._writer.write_csv("samples.csv", ("t", "x", "u"), rows))

    def _verify_pde(self, problem: PdeProblem, series: SeriesSolution, provider: SpectrumProvider) -> RunOutcome:
        solver = SpectralWaveSolver(provider, self._settings)
        reports = solver.mode_residual_reports(series, self._config.numerics.grid_n)
        norms = data_norms(
            problem.u1,
            problem.u2,
            _separable(problem, provider),
            problem.n_modes,
            provider,
            problem.params.t_end,
            self._settings.time_quad_n,
        )
        ratios = {}
        for quantity in QUANTITIES:
            try:
                ratios[quantity] = stability_ratio(series, norms, quantity, settings=self._settings)
            except ZeroDataNormError:
                ratios[quantity] = None
        finite = all(value is None or math.isfinite(value) for value in ratios.values())
        passed = finite and all(report.passed for report in reports)
        record = {
            "family": series.family.value,
            "N": series.n_modes,
            "modes": [{"xi": data.xi, **report.to_record()} for (data, _), report in zip(series.modes, reports)],
            "data_norms": norms.to_record(),
            "stability_ratios": ratios,
            "tail_indicator": series.tail_indicator,
            "passed": passed,
        }
        self._files.append(self._writer.write_json("verification.json", record))
        return self._verdict(passed, f"{series.family.value} series failed verification")

    def _grid(self) -> UniformGrid:
        return UniformGrid(t_end=self._config.t_end, n=self._config.numerics.grid_n)

    def _sample_times(self) -> np.ndarray:
        return np.linspace(0.0, self._config.t_end, self._config.numerics.samples)[1:]

    def _verdict(self, passed: bool, message: str) -> RunOutcome:
        if passed:
            return self._outcome(EXIT_OK)
        logger.warning(message)
        return self._outcome(EXIT_VERIFICATION, message)

    def _outcome(self, exit_code: int, message: str = "") -> RunOutcome:
        return RunOutcome(exit_code=exit_code, files=tuple(self._files), message=message)


def run(config: RunConfig, settings: NumericalSettings | None = None) -> RunOutcome:
    """Execute a validated configuration; see RunPipeline.run."""
    return RunPipeline(config, settings).run()


def spatial_function(provider: SpectrumProvider, weights: tuple[float, ...]) -> Callable[[np.ndarray], np.ndarray]:
    """h(x) = sum_k c_k e_k(x) for coefficient weights c_1..c_K."""

    def evaluate(x: np.ndarray) -> np.ndarray:
        points = np.asarray(x, dtype=float)
        return compensated_sum([c * provider.eigenfunction(k, points) for k, c in enumerate(weights, start=1)])

    return evaluate


def _separable(problem: PdeProblem, provider: SpectrumProvider) -> SeparableSource | None:
    if not problem.source_terms:
        return None
    return SeparableSource(tuple((term, spatial_function(provider, modes)) for term, modes in problem.source_terms))


def _functional_check(computed, targets, tolerance: float) -> dict:
    errors = [abs(float(c) - float(t)) / max(1.0, abs(float(t))) for c, t in zip(computed, targets)]
    return {
        "computed": [float(c) for c in computed],
        "targets": [float(t) for t in targets],
        "max_rel_error": max(errors),
        "tolerance": tolerance,
        "passed": max(errors) <= tolerance,
    }
