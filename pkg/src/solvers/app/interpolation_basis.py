"""Interpolation bases of the homogeneous inner and inner-boundary problems.

The basis function with index 1 carries unit data on the integral condition and
the one with index 2 on the derivative condition. ``interpolation_basis`` obtains
them from the condition system; ``e_hat`` and ``f_hat`` evaluate the closed forms
and are used as cross-checks only.
"""

import logging
from dataclasses import replace

import numpy as np

from shared.exceptions.degenerate_system_error import DegenerateDenominatorError
from shared.exceptions.validation_error import ValidationError
from shared.settings import DEFAULT_SETTINGS, NumericalSettings
from solvers.app.conditions import ConditionSpec, condition_factors, solve_conditions
from solvers.app.kernels import basis1, basis2, evaluate_solution
from solvers.domain.cross_check_report import CrossCheckReport
from solvers.domain.equation_params import EquationParams
from solvers.domain.problem_specs import InnerSpec
from solvers.domain.scalar_solution import ScalarSolution
from solvers.domain.source_term import SourceTerm

logger = logging.getLogger(__name__)


def e_hat(index: int, eq: EquationParams, beta: float, gamma: float, a: float, t, settings: NumericalSettings = DEFAULT_SETTINGS):
    """
    Closed-form inner basis function, both conditions imposed at a.

    E1 = t**(alpha-2) [t S E_{alpha,alpha}(m t**alpha) - a R E_{alpha,alpha-1}(m t**alpha)] / (a**(alpha+beta-1) (P S - Q R))
    E2 = t**(alpha-2) [-t Q E_{alpha,alpha}(m t**alpha) + a P E_{alpha,alpha-1}(m t**alpha)] / (a**(alpha-gamma-1) (P S - Q R))

    Args:
        index: 1 or 2
        eq: Equation parameters
        beta: Order of the integral condition
        gamma: Order of the derivative condition
        a: Condition point
        t: Scalar or array of times, t > 0

    Returns:
        A float for scalar t, otherwise an array

    Raises:
        DegenerateDenominatorError: If P S - Q R vanishes
    """
    _check_index(index)
    p, q, r, s = condition_factors(eq.alpha, eq.m, beta, gamma, a, a)
    bracket = p * s - q * r
    _check_denominator(bracket, max(abs(p * s), abs(q * r)), settings)
    first, second = basis1(eq, t), basis2(eq, t)
    if index == 1:
        return (s * first - a * r * second) / (a ** (eq.alpha + beta - 1.0) * bracket)
    return (-q * first + a * p * second) / (a ** (eq.alpha - gamma - 1.0) * bracket)


def f_hat(
    index: int,
    eq: EquationParams,
    beta: float,
    gamma: float,
    a: float,
    b: float,
    t,
    resolved: bool = False,
    settings: NumericalSettings = DEFAULT_SETTINGS,
):
    """
    Closed-form inner-boundary basis function, the integral condition at a and the derivative one at b.

    With P, Q evaluated at a and R, S at b, the printed form is

    F1 = t**(alpha-2) [t S E_{alpha,alpha} - b R E_{alpha,alpha-1}] / (a**(alpha+beta-2) (P S - Q R))
    F2 = t**(alpha-2) [-t Q E_{alpha,alpha} + a P E_{alpha,alpha-1}] / (b**(alpha-gamma-2) (P S - Q R))

    It only satisfies the conditions when a = b = 1. With ``resolved`` the bracket is
    replaced by a P S - b Q R, which matches the direct solve for every a, b.

    Raises:
        DegenerateDenominatorError: If the bracket vanishes
    """
    _check_index(index)
    p, q, r, s = condition_factors(eq.alpha, eq.m, beta, gamma, a, b)
    if resolved:
        bracket = a * p * s - b * q * r
        size = max(abs(a * p * s), abs(b * q * r))
    else:
        bracket = p * s - q * r
        size = max(abs(p * s), abs(q * r))
    _check_denominator(bracket, size, settings)
    first, second = basis1(eq, t), basis2(eq, t)
    if index == 1:
        return (s * first - b * r * second) / (a ** (eq.alpha + beta - 2.0) * bracket)
    return (-q * first + a * p * second) / (b ** (eq.alpha - gamma - 2.0) * bracket)


def interpolation_basis(spec: ConditionSpec, index: int, settings: NumericalSettings = DEFAULT_SETTINGS) -> ScalarSolution:
    """
    Homogeneous solution with unit data on condition ``index`` and zero on the other.

    The problem supplies the equation, orders and condition points; its data and source are ignored.

    Raises:
        DegenerateSystemError: If the condition system is degenerate
    """
    _check_index(index)
    unit = (1.0, 0.0) if index == 1 else (0.0, 1.0)
    if isinstance(spec, InnerSpec):
        unit_spec = replace(spec, d1_hat=unit[0], d2_hat=unit[1], source=SourceTerm.zero())
    else:
        unit_spec = replace(spec, e1_hat=unit[0], e2_hat=unit[1], source=SourceTerm.zero())
    return solve_conditions(unit_spec, settings)[0]


def basis_cross_check(
    spec: ConditionSpec, t, resolved: bool = False, settings: NumericalSettings = DEFAULT_SETTINGS
) -> tuple[CrossCheckReport, CrossCheckReport]:
    """
    Compare e_hat (inner) or f_hat (inner-boundary) with the direct-solve basis at the given times.

    Discrepancies are reported, never raised.

    Args:
        spec: Inner or inner-boundary spec fixing the equation and condition points
        t: Times in (0, T]
        resolved: Use the resolved bracket for f_hat (ignored for inner problems)
        settings: Degeneracy threshold and quadrature size

    Returns:
        One report per basis index
    """
    times = np.atleast_1d(np.asarray(t, dtype=float))
    reports = []
    for index in (1, 2):
        direct = np.asarray(evaluate_solution(interpolation_basis(spec, index, settings), times, settings.quad_n))
        if isinstance(spec, InnerSpec):
            closed = np.asarray(e_hat(index, spec.eq, spec.beta, spec.gamma, spec.a, times, settings))
        else:
            closed = np.asarray(f_hat(index, spec.eq, spec.beta, spec.gamma, spec.a, spec.b, times, resolved, settings))
        scale = max(float(np.max(np.abs(direct))), np.finfo(float).tiny)
        discrepancy = float(np.max(np.abs(closed - direct))) / scale
        report = CrossCheckReport(
            family=spec.family,
            index=index,
            resolved=resolved and not isinstance(spec, InnerSpec),
            times=tuple(map(float, times)),
            closed_form=tuple(map(float, closed)),
            direct=tuple(map(float, direct)),
            rel_discrepancy=discrepancy,
        )
        if not report.agrees:
            logger.warning(
                "Closed-form basis %d of the %s problem deviates from the direct solve by %.3e",
                index,
                spec.family.value,
                discrepancy,
            )
        reports.append(report)
    return reports[0], reports[1]


def _check_index(index: int) -> None:
    if index not in (1, 2):
        raise ValidationError(f"Basis index must be 1 or 2, got {index}", code="E-CONFIG-FIELD")


def _check_denominator(bracket: float, size: float, settings: NumericalSettings) -> None:
    if size == 0 or abs(bracket) <= settings.degeneracy_epsilon * size:
        raise DegenerateDenominatorError(f"Closed-form denominator vanishes (bracket={bracket:.3e})")
