import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Mapping, Sequence

import numpy as np

from fraccalc.domain.sampled_function import SampledFunction
from shared.exceptions.source_error import SourceError
from shared.exceptions.validation_error import ValidationError

Evaluator = Callable[[np.ndarray], np.ndarray]


class SourceKind(str, Enum):
    """How a source term was obtained."""

    ZERO = "zero"
    CLOSED_FORM = "closed_form"
    SAMPLED = "sampled"
    PROJECTED = "projected"


@dataclass(frozen=True, eq=False)
class SourceTerm:
    """Right-hand side f(t) of the scalar equation.

    A source may declare f(t) = t**p g(t) with p > -1 and g continuous; the
    Duhamel quadrature then integrates t**p exactly and only samples g.
    """

    kind: SourceKind
    evaluator: Evaluator
    tag: str = "zero"
    params: Mapping[str, Any] = field(default_factory=dict)
    singular_exponent: float = 0.0
    regular_evaluator: Evaluator | None = None

    def __post_init__(self):
        if not self.singular_exponent > -1:
            raise ValidationError(
                f"Source exponent must exceed -1, got {self.singular_exponent}", code="E-SOURCE-PARAM"
            )

    def __call__(self, t):
        """
        Evaluate f at t.

        Args:
            t: Scalar or array of times

        Returns:
            A float for scalar t, otherwise an array shaped like t

        Raises:
            SourceError: If the evaluator fails or returns non-finite values for t > 0
        """
        return self._evaluate(self.evaluator, t)

    def regular(self, t):
        """Evaluate g(t) = f(t) / t**p for t > 0."""
        if self.regular_evaluator is not None:
            return self._evaluate(self.regular_evaluator, t)
        if self.singular_exponent == 0:
            return self(t)
        times = np.asarray(t, dtype=float)
        return self(t) / times ** self.singular_exponent

    @property
    def is_zero(self) -> bool:
        return self.kind is SourceKind.ZERO

    def descriptor(self) -> dict:
        """JSON-ready description: the registry tag plus its parameters."""
        return {"tag": self.tag, **dict(self.params)}

    def _evaluate(self, evaluator: Evaluator, t):
        times = np.asarray(t, dtype=float)
        try:
            with np.errstate(divide="ignore", invalid="ignore"):
                values = np.broadcast_to(np.asarray(evaluator(times), dtype=float), times.shape)
        except Exception as e:
            raise SourceError(f"Source '{self.tag}' failed to evaluate: {str(e)}")
        if not np.all(np.isfinite(values[times > 0])):
            raise SourceError(f"Source '{self.tag}' returned non-finite values on (0, T]")
        if times.ndim == 0:
            return float(values)
        return np.array(values)

    @classmethod
    def zero(cls) -> "SourceTerm":
        return cls(kind=SourceKind.ZERO, evaluator=np.zeros_like, tag="zero")

    @classmethod
    def constant(cls, value: float) -> "SourceTerm":
        """f(t) = value."""
        value = _finite("value", value)
        if value == 0:
            return cls.zero()
        return cls(
            kind=SourceKind.CLOSED_FORM,
            evaluator=lambda t: np.full_like(t, value),
            tag="constant",
            params={"value": value},
        )

    @classmethod
    def power(cls, exponent: float, scale: float = 1.0) -> "SourceTerm":
        """
        f(t) = scale * t**exponent with exponent > -1.

        Raises:
            ValidationError: If the exponent is not greater than -1
        """
        exponent = _finite("exponent", exponent)
        scale = _finite("scale", scale)
        if not exponent > -1:
            raise ValidationError(f"Power source exponent must exceed -1, got {exponent}", code="E-SOURCE-PARAM")
        if scale == 0:
            return cls.zero()
        return cls(
            kind=SourceKind.CLOSED_FORM,
            evaluator=lambda t: scale * t ** exponent,
            tag="power",
            params={"exponent": exponent, "scale": scale},
            singular_exponent=exponent,
            regular_evaluator=lambda t: np.full_like(t, scale),
        )

    @classmethod
    def exponential(cls, rate: float, scale: float = 1.0) -> "SourceTerm":
        """f(t) = scale * exp(rate * t)."""
        rate = _finite("rate", rate)
        scale = _finite("scale", scale)
        if scale == 0:
            return cls.zero()
        return cls(
            kind=SourceKind.CLOSED_FORM,
            evaluator=lambda t: scale * np.exp(rate * t),
            tag="exp",
            params={"rate": rate, "scale": scale},
        )

    @classmethod
    def tabulated(cls, times: Sequence[float], values: Sequence[float], params: Mapping[str, Any] | None = None) -> "SourceTerm":
        """
        Piecewise-linear source through tabulated (t, f) pairs.

        Raises:
            ValidationError: If the table is shorter than two rows, unsorted or non-finite
        """
        times = np.asarray(times, dtype=float)
        values = np.asarray(values, dtype=float)
        if times.ndim != 1 or times.shape != values.shape or times.size < 2:
            raise ValidationError("A source table needs at least two (t, f) rows", code="E-SOURCE-PARAM")
        if not (np.all(np.isfinite(times)) and np.all(np.isfinite(values))):
            raise ValidationError("Source table entries must be finite", code="E-SOURCE-PARAM")
        if np.any(np.diff(times) <= 0):
            raise ValidationError("Source table times must be strictly increasing", code="E-SOURCE-PARAM")
        return cls(
            kind=SourceKind.SAMPLED,
            evaluator=lambda t: np.interp(t, times, values),
            tag="table",
            params=dict(params or {}),
        )

    @classmethod
    def from_sampled(cls, sampled: SampledFunction) -> "SourceTerm":
        """Piecewise-linear source through a SampledFunction, honouring its declared exponent."""
        nodes = sampled.grid.nodes
        regular = sampled.regular_part()
        exponent = sampled.singular_exponent if sampled.is_singular else 0.0
        return cls(
            kind=SourceKind.SAMPLED,
            evaluator=lambda t: t ** exponent * np.interp(t, nodes, regular),
            tag="sampled",
            params={"t_end": sampled.grid.t_end, "n": sampled.grid.n},
            singular_exponent=exponent,
            regular_evaluator=lambda t: np.interp(t, nodes, regular),
        )

    @classmethod
    def combination(cls, terms: Sequence[tuple[float, "SourceTerm"]], tag: str = "combination") -> "SourceTerm":
        """
        Linear combination sum_i c_i f_i(t). The declared exponent is the smallest one among the terms.

        Args:
            terms: Pairs (coefficient, source)
            tag: Tag reported in descriptors

        Returns:
            A single SourceTerm (zero if every term vanishes)
        """
        active = [(float(c), s) for c, s in terms if c != 0 and not s.is_zero]
        if not active:
            return cls.zero()
        if len(active) == 1 and active[0][0] == 1.0:
            return active[0][1]
        lowest = min(s.singular_exponent for _, s in active)

        def evaluator(t):
            return sum(c * s(t) for c, s in active)

        def regular(t):
            return sum(c * t ** (s.singular_exponent - lowest) * s.regular(t) for c, s in active)

        return cls(
            kind=SourceKind.PROJECTED,
            evaluator=evaluator,
            tag=tag,
            params={"terms": [dict(coefficient=c, **s.descriptor()) for c, s in active]},
            singular_exponent=lowest,
            regular_evaluator=regular,
        )

    @classmethod
    def projected(cls, fn: Evaluator, tag: str = "projected", singular_exponent: float = 0.0) -> "SourceTerm":
        """Source given directly as a vectorised callable, typically a spatial projection."""
        return cls(kind=SourceKind.PROJECTED, evaluator=fn, tag=tag, singular_exponent=singular_exponent)


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"Source parameter {name} must be finite, got {value}", code="E-SOURCE-PARAM")
    return value
