from dataclasses import dataclass

from solvers.domain.problem_specs import ProblemFamily

CROSS_CHECK_TOLERANCE = 1e-8


@dataclass(frozen=True)
class CrossCheckReport:
    """Comparison of a closed-form interpolation basis function with the direct solve."""

    family: ProblemFamily
    index: int
    resolved: bool
    times: tuple[float, ...]
    closed_form: tuple[float, ...]
    direct: tuple[float, ...]
    rel_discrepancy: float
    tolerance: float = CROSS_CHECK_TOLERANCE

    @property
    def agrees(self) -> bool:
        return self.rel_discrepancy <= self.tolerance

    def to_record(self) -> dict:
        return {
            "family": self.family.value,
            "index": self.index,
            "resolved": self.resolved,
            "times": list(self.times),
            "closed_form": list(self.closed_form),
            "direct": list(self.direct),
            "rel_discrepancy": self.rel_discrepancy,
            "tolerance": self.tolerance,
            "agrees": self.agrees,
        }
