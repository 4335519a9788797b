from dataclasses import dataclass

import numpy as np

from shared.exceptions.validation_error import ValidationError


@dataclass(frozen=True)
class UniformGrid:
    """Immutable uniform partition of [0, t_end] into n intervals."""

    t_end: float
    n: int

    def __post_init__(self):
        if not self.t_end > 0:
            raise ValidationError(f"Grid horizon must be positive, got {self.t_end}", code="E-TEND")
        if int(self.n) != self.n or self.n < 2:
            raise ValidationError(f"Grid needs at least 2 intervals, got {self.n}", code="E-GRID")

    @classmethod
    def from_step(cls, t_end: float, h: float) -> "UniformGrid":
        """
        Create the grid whose step is closest to h.

        Args:
            t_end: The horizon T
            h: Requested step

        Returns:
            A UniformGrid with n = round(T / h) intervals
        """
        if not h > 0:
            raise ValidationError(f"Grid step must be positive, got {h}", code="E-GRID")
        return cls(t_end=t_end, n=max(2, int(round(t_end / h))))

    @property
    def h(self) -> float:
        return self.t_end / self.n

    @property
    def size(self) -> int:
        """Number of nodes, n + 1."""
        return self.n + 1

    @property
    def nodes(self) -> np.ndarray:
        # j * h rather than cumulative sums, so t_n is T to rounding
        return np.arange(self.n + 1) * self.h

    def node(self, index: int) -> float:
        return index * self.h

    def index_of(self, t: float) -> int:
        """Index of the node nearest to t."""
        return int(round(t / self.h))
