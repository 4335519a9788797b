from dataclasses import dataclass
from typing import Callable

import numpy as np

from fraccalc.domain.uniform_grid import UniformGrid
from shared.exceptions.numerical_error import SingularInputError
from shared.exceptions.validation_error import ValidationError


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Values of f on a uniform grid, optionally declared as f(t) = t**p g(t) with g continuous.

    With a declared exponent p, values[0] may be a non-finite sentinel.
    """

    grid: UniformGrid
    values: np.ndarray
    singular_exponent: float | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size != self.grid.size:
            raise ValidationError(
                f"Expected {self.grid.size} samples for the grid, got {values.size}", code="E-GRID"
            )
        if self.singular_exponent is not None and not self.singular_exponent > -1:
            raise ValidationError(
                f"Singular exponent must exceed -1, got {self.singular_exponent}", code="E-SOURCE-PARAM"
            )
        if not np.all(np.isfinite(values[1:])):
            raise SingularInputError("Samples must be finite away from t = 0")
        if not np.isfinite(values[0]) and self.singular_exponent is None:
            raise SingularInputError("Non-finite sample at t = 0 requires a declared singular exponent")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_callable(
        cls, grid: UniformGrid, fn: Callable[[np.ndarray], np.ndarray], singular_exponent: float | None = None
    ) -> "SampledFunction":
        """
        Sample fn on the grid. With a negative declared exponent, t = 0 is stored as nan.

        Args:
            grid: The grid to sample on
            fn: Vectorised function of t
            singular_exponent: Optional declared exponent p

        Returns:
            A new SampledFunction
        """
        nodes = grid.nodes
        values = np.empty(grid.size)
        values[1:] = fn(nodes[1:])
        if singular_exponent is not None and singular_exponent < 0:
            values[0] = np.nan
        else:
            values[0] = fn(nodes[:1])[0]
        return cls(grid=grid, values=values, singular_exponent=singular_exponent)

    @property
    def is_singular(self) -> bool:
        return self.singular_exponent is not None and self.singular_exponent != 0

    def regular_part(self) -> np.ndarray:
        """
        Samples of g = f / t**p. g(0) is extrapolated from the first interior nodes.

        Returns:
            Array of g at every node (f itself when no exponent is declared)
        """
        if not self.is_singular:
            return np.array(self.values)
        p = self.singular_exponent
        nodes = self.grid.nodes
        regular = np.empty_like(nodes)
        regular[1:] = self.values[1:] / nodes[1:] ** p
        if regular.size >= 4:
            regular[0] = 3.0 * regular[1] - 3.0 * regular[2] + regular[3]
        else:
            regular[0] = 2.0 * regular[1] - regular[2]
        return regular
