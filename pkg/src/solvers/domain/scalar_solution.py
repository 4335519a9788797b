from dataclasses import dataclass, field

from solvers.domain.equation_params import EquationParams
from solvers.domain.problem_specs import ProblemFamily
from solvers.domain.source_term import SourceTerm


@dataclass(frozen=True)
class ScalarSolution:
    """Constants of the general solution

    u(t) = C1 t**(a-1) E_{a,a}(m t**a) + C2 t**(a-2) E_{a,a-1}(m t**a) + int_0^t (t-s)**(a-1) E_{a,a}(m (t-s)**a) f(s) ds
    """

    eq: EquationParams
    c1: float
    c2: float
    source: SourceTerm = field(default_factory=SourceTerm.zero)
    family: ProblemFamily = ProblemFamily.CAUCHY

    @property
    def is_trivial(self) -> bool:
        """True when u vanishes identically."""
        return self.c1 == 0 and self.c2 == 0 and self.source.is_zero

    def to_record(self) -> dict:
        return {
            "family": self.family.value,
            "alpha": self.eq.alpha,
            "m": self.eq.m,
            "t_end": self.eq.t_end,
            "C1": self.c1,
            "C2": self.c2,
            "source": self.source.descriptor(),
        }
