from dataclasses import dataclass, field

from solvers.domain.source_term import SourceTerm


@dataclass(frozen=True)
class ModeData:
    """Projections of the problem data on eigenfunction e_xi.

    ``u1_coef`` and ``u2_coef`` are the first and second condition values of the
    family (initial, inner or inner-boundary data); ``f_coef`` is t -> (f(t), e_xi)_H.
    """

    xi: int
    m_xi: float
    u1_coef: float = 0.0
    u2_coef: float = 0.0
    f_coef: SourceTerm = field(default_factory=SourceTerm.zero)

    @property
    def is_zero(self) -> bool:
        return self.u1_coef == 0 and self.u2_coef == 0 and self.f_coef.is_zero
