import logging

from solvers.domain.problem_specs import CauchySpec, ProblemFamily
from solvers.domain.scalar_solution import ScalarSolution

logger = logging.getLogger(__name__)


def solve_cauchy(spec: CauchySpec) -> ScalarSolution:
    """
    Solve the generalised Cauchy problem.

    The weighted integral functional picks out the coefficient of the t**(alpha-2)
    kernel and D**(alpha-1) that of the t**(alpha-1) kernel, so C1 = c2_hat and C2 = c1_hat.

    Args:
        spec: A validated CauchySpec

    Returns:
        The ScalarSolution carrying the problem's source
    """
    solution = ScalarSolution(
        eq=spec.eq,
        c1=float(spec.c2_hat),
        c2=float(spec.c1_hat),
        source=spec.source,
        family=ProblemFamily.CAUCHY,
    )
    logger.info("Cauchy problem solved: C1=%.12g C2=%.12g", solution.c1, solution.c2)
    return solution
