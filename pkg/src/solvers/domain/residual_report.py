from dataclasses import dataclass


@dataclass(frozen=True)
class ResidualReport:
    """Sup-norm residual of D**alpha u - m u - f on the checked nodes t >= t_min."""

    t_min: float
    h: float
    checked_nodes: int
    sup_residual: float
    rel_residual: float
    worst_t: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.rel_residual <= self.tolerance

    def to_record(self) -> dict:
        return {
            "t_min": self.t_min,
            "h": self.h,
            "checked_nodes": self.checked_nodes,
            "sup_residual": self.sup_residual,
            "rel_residual": self.rel_residual,
            "worst_t": self.worst_t,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }
