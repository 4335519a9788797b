import math
from dataclasses import dataclass

from shared.exceptions.validation_error import ValidationError
from solvers.domain.problem_specs import ProblemFamily, validate_point, validate_beta, validate_gamma
from solvers.domain.scalar_solution import ScalarSolution
from spectral.domain.mode_data import ModeData
from spectral.domain.spectrum_provider import SpectrumProvider


@dataclass(frozen=True)
class PdeParams:
    """Orders, condition points and horizon of D**alpha u + A u = f.

    ``a`` is required by the inner family, ``a`` and ``b`` by the inner-boundary family.
    """

    family: ProblemFamily
    alpha: float
    beta: float
    gamma: float
    t_end: float
    a: float | None = None
    b: float | None = None

    def __post_init__(self):
        if not math.isfinite(self.alpha) or not 1 < self.alpha <= 2:
            raise ValidationError(f"alpha must lie in (1, 2], got {self.alpha}", code="E-ALPHA-RANGE")
        if not math.isfinite(self.t_end) or not self.t_end > 0:
            raise ValidationError(f"t_end must be positive, got {self.t_end}", code="E-TEND")
        validate_beta(self.alpha, self.beta)
        validate_gamma(self.alpha, self.gamma)
        if self.family is ProblemFamily.INNER:
            if self.a is None:
                raise ValidationError("Inner problems need the point a", code="E-INNER-POINT")
            validate_point("a", self.a, self.t_end, inclusive=False, code="E-INNER-POINT")
        elif self.family is ProblemFamily.INNER_BOUNDARY:
            if self.a is None or self.b is None:
                raise ValidationError("Inner-boundary problems need the points a and b", code="E-IB-POINTS")
            validate_point("a", self.a, self.t_end, inclusive=True, code="E-IB-POINTS")
            validate_point("b", self.b, self.t_end, inclusive=True, code="E-IB-POINTS")

    @classmethod
    def from_dict(cls, data: dict) -> "PdeParams":
        return cls(
            family=ProblemFamily.from_string(data["family"]),
            alpha=float(data["alpha"]),
            beta=float(data["beta"]),
            gamma=float(data["gamma"]),
            t_end=float(data["t_end"]),
            a=None if data.get("a") is None else float(data["a"]),
            b=None if data.get("b") is None else float(data["b"]),
        )


@dataclass(frozen=True, eq=False)
class SeriesSolution:
    """Truncated eigenfunction expansion u(t, x) = sum_{xi <= N} u_xi(t) e_xi(x).

    Mode xi holds the scalar solution of D**alpha u_xi + m_xi u_xi = f_xi, i.e. m = -m_xi.
    """

    params: PdeParams
    modes: tuple[tuple[ModeData, ScalarSolution], ...]
    provider: SpectrumProvider

    @property
    def n_modes(self) -> int:
        return len(self.modes)

    @property
    def family(self) -> ProblemFamily:
        return self.params.family

    @property
    def tail_indicator(self) -> float:
        """Largest constant of the last retained mode."""
        if not self.modes:
            return 0.0
        last = self.modes[-1][1]
        return max(abs(last.c1), abs(last.c2))

    def to_record(self) -> dict:
        return {
            "family": self.params.family.value,
            "alpha": self.params.alpha,
            "beta": self.params.beta,
            "gamma": self.params.gamma,
            "a": self.params.a,
            "b": self.params.b,
            "t_end": self.params.t_end,
            "N": self.n_modes,
            "tail_indicator": self.tail_indicator,
            "modes": [
                {"xi": data.xi, "m_xi": data.m_xi, "C1": sol.c1, "C2": sol.c2, "source": sol.source.descriptor()}
                for data, sol in self.modes
            ],
        }
