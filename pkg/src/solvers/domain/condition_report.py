from dataclasses import dataclass

import numpy as np

from solvers.domain.problem_specs import ProblemFamily


@dataclass(frozen=True)
class ConditionReport:
    """The 2x2 system fixing (C1, C2), with both solvability verdicts.

    ``rel_margin`` is |det| over the squared max-norm of the matrix. The power-free
    values are a P S and b Q R, with P, Q the Mittag-Leffler factors of row 1 at a and
    R, S those of row 2 at b; their margin is normalised the same way on the
    row-rescaled matrix [[a P, Q], [b R, S]].
    """

    family: ProblemFamily
    a: float
    b: float
    matrix: tuple[tuple[float, float], tuple[float, float]]
    rhs: tuple[float, float]
    det: float
    rel_margin: float
    power_free_lhs: float
    power_free_rhs: float
    power_free_margin: float
    degeneracy_epsilon: float

    @property
    def solvable(self) -> bool:
        return self.rel_margin > self.degeneracy_epsilon

    @property
    def power_free_solvable(self) -> bool:
        return self.power_free_margin > self.degeneracy_epsilon

    @property
    def coherent(self) -> bool:
        """True when the determinant and power-free verdicts agree."""
        return self.solvable == self.power_free_solvable

    def matrix_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=float)

    def rhs_array(self) -> np.ndarray:
        return np.array(self.rhs, dtype=float)

    def to_record(self) -> dict:
        return {
            "family": self.family.value,
            "a": self.a,
            "b": self.b,
            "matrix": [list(row) for row in self.matrix],
            "rhs": list(self.rhs),
            "det": self.det,
            "rel_margin": self.rel_margin,
            "power_free_lhs": self.power_free_lhs,
            "power_free_rhs": self.power_free_rhs,
            "power_free_margin": self.power_free_margin,
            "degeneracy_epsilon": self.degeneracy_epsilon,
            "solvable": self.solvable,
            "power_free_solvable": self.power_free_solvable,
        }
