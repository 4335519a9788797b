import math
from dataclasses import dataclass, field
from enum import Enum

from shared.exceptions.validation_error import SpecError, ValidationError
from solvers.domain.equation_params import ORDER_TOLERANCE, EquationParams
from solvers.domain.source_term import SourceTerm


class ProblemFamily(str, Enum):
    """Condition family fixing the constants of the general solution."""

    CAUCHY = "cauchy"
    INNER = "inner"
    INNER_BOUNDARY = "inner_boundary"

    @classmethod
    def from_string(cls, value: str) -> "ProblemFamily":
        try:
            return cls(value)
        except ValueError:
            raise ValidationError(
                f"Unknown problem family {value!r}; expected one of {[f.value for f in cls]}", code="E-FAMILY"
            )


def validate_beta(alpha: float, beta: float) -> None:
    """Raise unless 0 <= beta <= 2 - alpha."""
    if not math.isfinite(beta) or beta < 0 or beta > 2.0 - alpha + ORDER_TOLERANCE:
        raise ValidationError(f"beta must lie in [0, 2 - alpha] = [0, {2.0 - alpha:g}], got {beta}", code="E-BETA-RANGE")


def validate_gamma(alpha: float, gamma: float) -> None:
    """Raise unless 0 < gamma <= alpha - 1."""
    if not math.isfinite(gamma) or gamma <= 0 or gamma > alpha - 1.0 + ORDER_TOLERANCE:
        raise ValidationError(
            f"gamma must lie in (0, alpha - 1] = (0, {alpha - 1.0:g}], got {gamma}", code="E-GAMMA-RANGE"
        )


def is_critical(alpha: float, gamma: float) -> bool:
    """True when gamma = alpha - 1, where D**gamma of the second basis function stays finite at 0."""
    return abs(gamma - (alpha - 1.0)) <= ORDER_TOLERANCE


def validate_point(name: str, value: float, upper: float, inclusive: bool, code: str) -> None:
    upper_ok = value <= upper if inclusive else value < upper
    if not math.isfinite(value) or value <= 0 or not upper_ok:
        bracket = "]" if inclusive else ")"
        raise ValidationError(f"{name} must lie in (0, {upper:g}{bracket}, got {value}", code=code)


@dataclass(frozen=True)
class CauchySpec:
    """Generalised initial conditions:
    Gamma(alpha+beta-1) t**(2-alpha-beta) (I**beta u)(t) -> c1_hat and (D**gamma u)(t) -> c2_hat as t -> 0.
    """

    eq: EquationParams
    beta: float
    gamma: float
    c1_hat: float = 0.0
    c2_hat: float = 0.0
    source: SourceTerm = field(default_factory=SourceTerm.zero)

    family = ProblemFamily.CAUCHY

    def __post_init__(self):
        validate_beta(self.eq.alpha, self.beta)
        validate_gamma(self.eq.alpha, self.gamma)
        if (self.c1_hat != 0 or self.c2_hat != 0) and not is_critical(self.eq.alpha, self.gamma):
            raise SpecError(
                "Nonzero initial data need gamma = alpha - 1; "
                f"got gamma = {self.gamma} with alpha = {self.eq.alpha}",
                code="E-CAUCHY-GAMMA",
            )


@dataclass(frozen=True)
class InnerSpec:
    """Inner conditions (I**beta u)(a) = d1_hat and (D**gamma u)(a) = d2_hat with 0 < a < T."""

    eq: EquationParams
    beta: float
    gamma: float
    a: float
    d1_hat: float = 0.0
    d2_hat: float = 0.0
    source: SourceTerm = field(default_factory=SourceTerm.zero)

    family = ProblemFamily.INNER

    def __post_init__(self):
        validate_beta(self.eq.alpha, self.beta)
        validate_gamma(self.eq.alpha, self.gamma)
        validate_point("a", self.a, self.eq.t_end, inclusive=False, code="E-INNER-POINT")

    @property
    def b(self) -> float:
        """The derivative condition is imposed at the same point."""
        return self.a

    @property
    def data(self) -> tuple[float, float]:
        return (self.d1_hat, self.d2_hat)


@dataclass(frozen=True)
class InnerBoundarySpec:
    """Inner-boundary conditions (I**beta u)(a) = e1_hat and (D**gamma u)(b) = e2_hat with a, b in (0, T]."""

    eq: EquationParams
    beta: float
    gamma: float
    a: float
    b: float
    e1_hat: float = 0.0
    e2_hat: float = 0.0
    source: SourceTerm = field(default_factory=SourceTerm.zero)

    family = ProblemFamily.INNER_BOUNDARY

    def __post_init__(self):
        validate_beta(self.eq.alpha, self.beta)
        validate_gamma(self.eq.alpha, self.gamma)
        validate_point("a", self.a, self.eq.t_end, inclusive=True, code="E-IB-POINTS")
        validate_point("b", self.b, self.eq.t_end, inclusive=True, code="E-IB-POINTS")

    @property
    def data(self) -> tuple[float, float]:
        return (self.e1_hat, self.e2_hat)
