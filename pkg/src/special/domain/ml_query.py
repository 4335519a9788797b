import math
from dataclasses import dataclass
from enum import Enum

from shared.exceptions.validation_error import DomainError


class MLMethod(str, Enum):
    """Evaluation regime used for a Mittag-Leffler value."""

    SERIES = "series"
    ASYMPTOTIC = "asymptotic"
    INTEGRAL = "integral"
    RECURRENCE_REDUCED = "recurrence-reduced"


@dataclass(frozen=True)
class MLQuery:
    """Immutable point (alpha, beta, z) at which E_{alpha,beta}(z) is evaluated.

    Any finite alpha > 0 and any finite beta are accepted; the solvers only query 1 < alpha <= 2.
    """

    alpha: float
    beta: float
    z: float

    def __post_init__(self):
        for name in ("alpha", "beta", "z"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite, got {getattr(self, name)}", code="E-ML-PARAM")
        if self.alpha <= 0:
            raise DomainError(f"alpha must be positive, got {self.alpha}", code="E-ALPHA-RANGE")

    @classmethod
    def from_dict(cls, data: dict) -> "MLQuery":
        """
        Create an MLQuery from a dictionary with keys alpha, beta and z.

        Args:
            data: Dictionary containing the three parameters

        Returns:
            A new MLQuery instance
        """
        return cls(alpha=float(data["alpha"]), beta=float(data["beta"]), z=float(data["z"]))


@dataclass(frozen=True)
class MLResult:
    """Value of E_{alpha,beta}(z) with the regime that produced it and an error bound."""

    value: float
    method: MLMethod
    est_abs_error: float

    def to_record(self) -> dict:
        return {"value": self.value, "method": self.method.value, "est_abs_error": self.est_abs_error}
