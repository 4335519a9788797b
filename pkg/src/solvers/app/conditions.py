"""Inner and inner-boundary problems: the 2x2 condition system for (C1, C2)."""

import logging

import numpy as np

from shared.exceptions.degenerate_system_error import DegenerateSystemError
from shared.settings import DEFAULT_SETTINGS, NumericalSettings
from solvers.app.kernels import convolution
from solvers.domain.condition_report import ConditionReport
from solvers.domain.problem_specs import InnerBoundarySpec, InnerSpec
from solvers.domain.scalar_solution import ScalarSolution
from special.app.mittag_leffler import mittag_leffler

logger = logging.getLogger(__name__)

ConditionSpec = InnerSpec | InnerBoundarySpec


def condition_factors(alpha: float, m: float, beta: float, gamma: float, a: float, b: float) -> tuple[float, float, float, float]:
    """
    Mittag-Leffler factors of the condition system.

    Returns:
        (P, Q, R, S) = (E_{alpha,alpha+beta}(m a**alpha), E_{alpha,alpha+beta-1}(m a**alpha),
        E_{alpha,alpha-gamma}(m b**alpha), E_{alpha,alpha-1-gamma}(m b**alpha))
    """
    za = m * a ** alpha
    zb = m * b ** alpha
    return (
        mittag_leffler(alpha, alpha + beta, za),
        mittag_leffler(alpha, alpha + beta - 1.0, za),
        mittag_leffler(alpha, alpha - gamma, zb),
        mittag_leffler(alpha, alpha - 1.0 - gamma, zb),
    )


def build_condition_system(spec: ConditionSpec, settings: NumericalSettings = DEFAULT_SETTINGS) -> ConditionReport:
    """
    Assemble the condition system A (C1, C2) = rhs for an inner or inner-boundary problem.

    Row 1 is (I**beta u)(a) and row 2 is (D**gamma u)(b), with b = a for inner problems.
    Degeneracy is reported, never raised.

    Args:
        spec: A validated InnerSpec or InnerBoundarySpec
        settings: Quadrature size and degeneracy threshold

    Returns:
        The ConditionReport with determinant and power-free verdicts
    """
    alpha, m = spec.eq.alpha, spec.eq.m
    beta, gamma, a, b = spec.beta, spec.gamma, spec.a, spec.b
    p, q, r, s = condition_factors(alpha, m, beta, gamma, a, b)

    matrix = np.array(
        [
            [a ** (alpha + beta - 1.0) * p, a ** (alpha + beta - 2.0) * q],
            [b ** (alpha - gamma - 1.0) * r, b ** (alpha - gamma - 2.0) * s],
        ]
    )
    moments = (
        convolution(alpha, m, alpha + beta, spec.source, a, settings.quad_n),
        convolution(alpha, m, alpha - gamma, spec.source, b, settings.quad_n),
    )
    data = spec.data
    rhs = (float(data[0] - moments[0]), float(data[1] - moments[1]))

    det = float(matrix[0, 0] * matrix[1, 1] - matrix[0, 1] * matrix[1, 0])
    largest = float(np.max(np.abs(matrix)))
    rel_margin = abs(det) / largest ** 2 if largest > 0 else 0.0

    lhs_value = a * p * s
    rhs_value = b * q * r
    free_largest = max(abs(a * p), abs(q), abs(b * r), abs(s))
    power_free_margin = abs(lhs_value - rhs_value) / free_largest ** 2 if free_largest > 0 else 0.0

    report = ConditionReport(
        family=spec.family,
        a=float(a),
        b=float(b),
        matrix=(tuple(map(float, matrix[0])), tuple(map(float, matrix[1]))),
        rhs=rhs,
        det=det,
        rel_margin=float(rel_margin),
        power_free_lhs=float(lhs_value),
        power_free_rhs=float(rhs_value),
        power_free_margin=float(power_free_margin),
        degeneracy_epsilon=settings.degeneracy_epsilon,
    )
    if not report.coherent:
        logger.warning(
            "Determinant and power-free verdicts disagree (rel_margin=%.3e, power_free_margin=%.3e)",
            report.rel_margin,
            report.power_free_margin,
        )
    logger.debug("Condition system for %s: det=%.6e rel_margin=%.3e", spec.family.value, det, rel_margin)
    return report


def solve_conditions(spec: ConditionSpec, settings: NumericalSettings = DEFAULT_SETTINGS) -> tuple[ScalarSolution, ConditionReport]:
    """
    Solve the condition system directly and return the solution with its report.

    Raises:
        DegenerateSystemError: If the system is degenerate; the report is attached
    """
    report = build_condition_system(spec, settings)
    if not report.solvable:
        raise DegenerateSystemError(
            f"Condition system of the {spec.family.value} problem is degenerate "
            f"(rel_margin={report.rel_margin:.3e} <= {report.degeneracy_epsilon:g})",
            report=report,
        )
    c1, c2 = np.linalg.solve(report.matrix_array(), report.rhs_array())
    solution = ScalarSolution(eq=spec.eq, c1=float(c1), c2=float(c2), source=spec.source, family=spec.family)
    logger.info("%s problem solved: C1=%.12g C2=%.12g", spec.family.value, solution.c1, solution.c2)
    return solution, report


def solve_inner(spec: InnerSpec, settings: NumericalSettings = DEFAULT_SETTINGS) -> ScalarSolution:
    """
    Solve the inner problem (I**beta u)(a) = d1_hat, (D**gamma u)(a) = d2_hat.

    Raises:
        DegenerateSystemError: If the condition system is degenerate
    """
    return solve_conditions(spec, settings)[0]


def solve_inner_boundary(spec: InnerBoundarySpec, settings: NumericalSettings = DEFAULT_SETTINGS) -> ScalarSolution:
    """
    Solve the inner-boundary problem (I**beta u)(a) = e1_hat, (D**gamma u)(b) = e2_hat.

    Raises:
        DegenerateSystemError: If the condition system is degenerate
    """
    return solve_conditions(spec, settings)[0]
