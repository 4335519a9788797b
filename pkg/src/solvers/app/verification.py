"""Numerical verification of constructed solutions against the equation itself."""

import logging

import numpy as np

from fraccalc.app.riemann_liouville import rl_derivative2_profile
from fraccalc.domain.sampled_function import SampledFunction
from fraccalc.domain.uniform_grid import UniformGrid
from shared.exceptions.numerical_error import UnderflowError
from shared.exceptions.validation_error import ValidationError
from shared.settings import DEFAULT_SETTINGS, NumericalSettings
from solvers.app.kernels import evaluate_solution
from solvers.domain.residual_report import ResidualReport
from solvers.domain.scalar_solution import ScalarSolution

logger = logging.getLogger(__name__)

MIN_TOLERANCE = 1e-3
STEP_TOLERANCE_FACTOR = 10.0
EXPONENT_WINDOW = np.logspace(-4, -2, 25)


def residual_tolerance(h: float) -> float:
    """Default pass threshold max(10 h, 1e-3) on the relative residual."""
    return max(STEP_TOLERANCE_FACTOR * h, MIN_TOLERANCE)


def sample_solution(sol: ScalarSolution, grid: UniformGrid, quad_n: int = DEFAULT_SETTINGS.quad_n) -> SampledFunction:
    """Sample u on the grid, declaring the t**(alpha-2) singularity when the second kernel is present."""
    exponent = sol.eq.alpha - 2.0 if sol.c2 != 0 and sol.eq.alpha < 2 else None
    return SampledFunction.from_callable(grid, lambda t: evaluate_solution(sol, t, quad_n), exponent)


def residual_report(
    sol: ScalarSolution,
    grid: UniformGrid,
    t_min: float | None = None,
    settings: NumericalSettings = DEFAULT_SETTINGS,
) -> ResidualReport:
    """
    Check D**alpha u - m u = f on the grid nodes with t >= t_min.

    D**alpha u is computed numerically from the samples of u. The relative residual is
    sup|res| / max(1, sup|m u|, sup|f|, sup|D**alpha u|) over the checked nodes.

    Args:
        sol: The solution to verify
        grid: Uniform grid on [0, T'] with T' <= T
        t_min: Left end of the checked window, default t_min_fraction * T
        settings: Quadrature size and default window

    Returns:
        A ResidualReport; ``passed`` compares against max(10 h, 1e-3)

    Raises:
        ValidationError: If t_min < 2 h or the grid extends beyond T
    """
    eq = sol.eq
    if grid.t_end > eq.t_end * (1.0 + 1e-12):
        raise ValidationError(f"Grid horizon {grid.t_end} exceeds T = {eq.t_end}", code="E-GRID")
    if t_min is None:
        t_min = settings.t_min_fraction * eq.t_end
    if not t_min >= 2.0 * grid.h or t_min > grid.t_end:
        raise ValidationError(f"t_min must lie in [2h, T] = [{2.0 * grid.h:g}, {grid.t_end:g}], got {t_min}", code="E-TMIN")

    sampled = sample_solution(sol, grid, settings.quad_n)
    derivative = rl_derivative2_profile(sampled, eq.alpha)
    nodes = grid.nodes
    checked = (nodes >= t_min * (1.0 - 1e-12)) & np.isfinite(derivative)

    t = nodes[checked]
    u = sampled.values[checked]
    d = derivative[checked]
    f = np.asarray(sol.source(t))
    residual = d - eq.m * u - f

    sup_residual = float(np.max(np.abs(residual))) if residual.size else 0.0
    scale = max(1.0, *(float(np.max(np.abs(x))) for x in (eq.m * u, f, d) if x.size))
    worst = float(t[int(np.argmax(np.abs(residual)))]) if residual.size else float(t_min)
    report = ResidualReport(
        t_min=float(t_min),
        h=grid.h,
        checked_nodes=int(t.size),
        sup_residual=sup_residual,
        rel_residual=sup_residual / scale,
        worst_t=worst,
        tolerance=residual_tolerance(grid.h),
    )
    logger.info(
        "Residual of %s solution on [%g, %g]: %.3e relative (tolerance %.1e)",
        sol.family.value,
        t_min,
        grid.t_end,
        report.rel_residual,
        report.tolerance,
    )
    return report


def singular_exponent_estimate(sol: ScalarSolution, quad_n: int = DEFAULT_SETTINGS.quad_n) -> float:
    """
    Least-squares slope of log|u| against log t on [1e-4, 1e-2].

    Raises:
        UnderflowError: If u vanishes on the window
    """
    times = EXPONENT_WINDOW * min(1.0, sol.eq.t_end)
    values = np.abs(np.asarray(evaluate_solution(sol, times, quad_n)))
    usable = values > 0
    if np.count_nonzero(usable) < 2:
        raise UnderflowError("u vanishes on the small-time window; no exponent to estimate")
    slope, _ = np.polyfit(np.log(times[usable]), np.log(values[usable]), 1)
    return float(slope)
