import math
from dataclasses import dataclass

from shared.exceptions.validation_error import ValidationError

ORDER_TOLERANCE = 1e-12


@dataclass(frozen=True)
class EquationParams:
    """Immutable parameters of D**alpha u - m u = f on (0, t_end)."""

    alpha: float
    m: float
    t_end: float

    def __post_init__(self):
        if not math.isfinite(self.alpha) or not 1 < self.alpha <= 2:
            raise ValidationError(f"alpha must lie in (1, 2], got {self.alpha}", code="E-ALPHA-RANGE")
        if not math.isfinite(self.m):
            raise ValidationError(f"m must be finite, got {self.m}", code="E-CONFIG-FIELD")
        if not math.isfinite(self.t_end) or not self.t_end > 0:
            raise ValidationError(f"t_end must be positive, got {self.t_end}", code="E-TEND")

    @property
    def is_classical(self) -> bool:
        """True for alpha = 2, where the equation is u'' - m u = f."""
        return self.alpha == 2.0

    @classmethod
    def from_dict(cls, data: dict) -> "EquationParams":
        return cls(alpha=float(data["alpha"]), m=float(data["m"]), t_end=float(data["t_end"]))

    def to_record(self) -> dict:
        return {"alpha": self.alpha, "m": self.m, "t_end": self.t_end}
