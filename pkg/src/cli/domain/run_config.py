"""Validated run configuration for the fracwave command line."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Mapping

from shared.exceptions.validation_error import ValidationError
from shared.settings import NumericalSettings
from solvers.app.kernels import MIN_QUAD_N
from solvers.domain.equation_params import EquationParams
from solvers.domain.problem_specs import CauchySpec, InnerBoundarySpec, InnerSpec, ProblemFamily
from solvers.domain.source_term import SourceTerm
from special.domain.ml_query import MLQuery
from spectral.domain.series_solution import PdeParams

SourceBuilder = Callable[[Mapping[str, Any] | None], SourceTerm]


class RunMode(str, Enum):
    ML_EVAL = "ml_eval"
    SOLVE_SCALAR = "solve_scalar"
    SOLVE_PDE = "solve_pde"
    VERIFY = "verify"

    @classmethod
    def from_string(cls, value: str) -> "RunMode":
        try:
            return cls(value)
        except ValueError:
            raise ValidationError(f"Unknown mode {value!r}; expected one of {[m.value for m in cls]}", code="E-MODE")


class ProblemKind(str, Enum):
    SCALAR = "scalar"
    PDE = "pde"


@dataclass(frozen=True)
class Numerics:
    """Discretisation choices of a run."""

    grid_n: int = NumericalSettings.grid_n
    quad_n: int = NumericalSettings.quad_n
    time_quad_n: int = NumericalSettings.time_quad_n
    t_min: float | None = None
    samples: int = 101
    x_samples: int = 21

    def settings(self, base: NumericalSettings) -> NumericalSettings:
        return base.with_overrides(grid_n=self.grid_n, quad_n=self.quad_n, time_quad_n=self.time_quad_n)


@dataclass(frozen=True)
class OutputSpec:
    directory: str = "out"
    prefix: str = "run"


@dataclass(frozen=True)
class PdeProblem:
    """Spectral problem: coefficient data on the first n_modes eigenfunctions of the operator."""

    params: PdeParams
    n_modes: int
    operator: Mapping[str, Any]
    u1: tuple[float, ...]
    u2: tuple[float, ...]
    source_terms: tuple[tuple[SourceTerm, tuple[float, ...]], ...] = ()


ScalarSpec = CauchySpec | InnerSpec | InnerBoundarySpec


@dataclass(frozen=True)
class RunConfig:
    """A complete, validated run."""

    mode: RunMode
    kind: ProblemKind
    scalar: ScalarSpec | None = None
    pde: PdeProblem | None = None
    query: MLQuery | None = None
    numerics: Numerics = field(default_factory=Numerics)
    output: OutputSpec = field(default_factory=OutputSpec)

    @property
    def t_end(self) -> float:
        if self.scalar is not None:
            return self.scalar.eq.t_end
        if self.pde is not None:
            return self.pde.params.t_end
        return 0.0

    @property
    def family(self) -> ProblemFamily | None:
        if self.scalar is not None:
            return self.scalar.family
        if self.pde is not None:
            return self.pde.params.family
        return None

    @classmethod
    def from_dict(
        cls, data: Mapping[str, Any], source_builder: SourceBuilder, mode: RunMode | str | None = None
    ) -> "RunConfig":
        """
        Validate a configuration document.

        Args:
            data: Parsed JSON document
            source_builder: Turns a tagged source descriptor into a SourceTerm
            mode: Overrides the document's "mode" (set by the CLI subcommand)

        Returns:
            A RunConfig whose parameters satisfy every family invariant

        Raises:
            ValidationError: On the first violation, with its diagnostic code
        """
        if not isinstance(data, Mapping):
            raise ValidationError("Configuration must be a JSON object", code="E-CONFIG-FORMAT")
        raw_mode = mode if mode is not None else _require(data, "mode", "configuration")
        run_mode = raw_mode if isinstance(raw_mode, RunMode) else RunMode.from_string(raw_mode)
        numerics = _numerics(data.get("numerics") or {})
        output = _output(data.get("output") or {})

        if run_mode is RunMode.ML_EVAL:
            query = _section(data, "query")
            ml_query = MLQuery(alpha=_number(query, "alpha"), beta=_number(query, "beta"), z=_number(query, "z"))
            return cls(mode=run_mode, kind=ProblemKind.SCALAR, query=ml_query, numerics=numerics, output=output)

        problem = _section(data, "problem")
        kind = ProblemKind.PDE if run_mode is RunMode.SOLVE_PDE else ProblemKind.SCALAR
        if run_mode is RunMode.VERIFY:
            raw_kind = problem.get("kind", ProblemKind.SCALAR.value)
            if raw_kind not in [k.value for k in ProblemKind]:
                raise ValidationError(f"Problem kind must be 'scalar' or 'pde', got {raw_kind!r}", code="E-CONFIG-FIELD")
            kind = ProblemKind(raw_kind)

        if kind is ProblemKind.SCALAR:
            config = cls(mode=run_mode, kind=kind, scalar=_scalar_spec(problem, source_builder), numerics=numerics, output=output)
        else:
            config = cls(mode=run_mode, kind=kind, pde=_pde_problem(problem, source_builder), numerics=numerics, output=output)
        _check_window(config)
        return config


def _scalar_spec(problem: Mapping[str, Any], source_builder: SourceBuilder) -> ScalarSpec:
    family = ProblemFamily.from_string(_require(problem, "family", "problem"))
    eq = EquationParams(alpha=_number(problem, "alpha"), m=_number(problem, "m"), t_end=_number(problem, "t_end"))
    beta, gamma = _number(problem, "beta"), _number(problem, "gamma")
    first, second = _pair(problem.get("data", [0.0, 0.0]))
    source = source_builder(problem.get("source"))
    if family is ProblemFamily.CAUCHY:
        return CauchySpec(eq, beta, gamma, first, second, source)
    if family is ProblemFamily.INNER:
        return InnerSpec(eq, beta, gamma, _number(problem, "a"), first, second, source)
    return InnerBoundarySpec(eq, beta, gamma, _number(problem, "a"), _number(problem, "b"), first, second, source)


def _pde_problem(problem: Mapping[str, Any], source_builder: SourceBuilder) -> PdeProblem:
    family = ProblemFamily.from_string(_require(problem, "family", "problem"))
    params = PdeParams(
        family=family,
        alpha=_number(problem, "alpha"),
        beta=_number(problem, "beta"),
        gamma=_number(problem, "gamma"),
        t_end=_number(problem, "t_end"),
        a=_number(problem, "a") if "a" in problem else None,
        b=_number(problem, "b") if "b" in problem else None,
    )
    n_modes = problem.get("n_modes")
    if isinstance(n_modes, bool) or not isinstance(n_modes, int) or n_modes < 1:
        raise ValidationError(f"n_modes must be a positive integer, got {n_modes!r}", code="E-MODES")
    operator = problem.get("operator", {"kind": "dirichlet"})
    if not isinstance(operator, Mapping) or operator.get("kind") not in ("dirichlet", "tabulated"):
        raise ValidationError("operator.kind must be 'dirichlet' or 'tabulated'", code="E-OPERATOR")
    terms = []
    for term in problem.get("source_terms", []):
        if not isinstance(term, Mapping):
            raise ValidationError("Each source term needs 'time' and 'modes'", code="E-DATA")
        terms.append((source_builder(term.get("time")), _vector(term.get("modes"), n_modes, "source modes")))
    return PdeProblem(
        params=params,
        n_modes=n_modes,
        operator=dict(operator),
        u1=_vector(problem.get("u1", []), n_modes, "u1"),
        u2=_vector(problem.get("u2", []), n_modes, "u2"),
        source_terms=tuple(terms),
    )


def _numerics(raw: Mapping[str, Any]) -> Numerics:
    if not isinstance(raw, Mapping):
        raise ValidationError("numerics must be an object", code="E-CONFIG-FORMAT")
    defaults = Numerics()
    grid_n = _integer(raw, "grid_n", defaults.grid_n)
    quad_n = _integer(raw, "quad_n", defaults.quad_n)
    time_quad_n = _integer(raw, "time_quad_n", defaults.time_quad_n)
    samples = _integer(raw, "samples", defaults.samples)
    x_samples = _integer(raw, "x_samples", defaults.x_samples)
    if grid_n < 2:
        raise ValidationError(f"grid_n must be at least 2, got {grid_n}", code="E-GRID")
    if quad_n < MIN_QUAD_N or time_quad_n < 16:
        raise ValidationError(f"quad_n must be >= {MIN_QUAD_N} and time_quad_n >= 16", code="E-QUAD")
    if samples < 2 or x_samples < 2:
        raise ValidationError("samples and x_samples must be at least 2", code="E-GRID")
    t_min = raw.get("t_min")
    return Numerics(
        grid_n=grid_n,
        quad_n=quad_n,
        time_quad_n=time_quad_n,
        t_min=None if t_min is None else _number(raw, "t_min"),
        samples=samples,
        x_samples=x_samples,
    )


def _output(raw: Mapping[str, Any]) -> OutputSpec:
    if not isinstance(raw, Mapping):
        raise ValidationError("output must be an object", code="E-CONFIG-FORMAT")
    directory = raw.get("dir", OutputSpec.directory)
    prefix = raw.get("prefix", OutputSpec.prefix)
    if not isinstance(directory, str) or not isinstance(prefix, str) or not prefix:
        raise ValidationError("output.dir and output.prefix must be non-empty strings", code="E-CONFIG-FIELD")
    return OutputSpec(directory=directory, prefix=prefix)


def _check_window(config: RunConfig) -> None:
    t_min = config.numerics.t_min
    if t_min is None:
        return
    h = config.t_end / config.numerics.grid_n
    if not 2.0 * h <= t_min <= config.t_end:
        raise ValidationError(f"t_min must lie in [2h, T] = [{2.0 * h:g}, {config.t_end:g}], got {t_min}", code="E-TMIN")


def _section(data: Mapping[str, Any], name: str) -> Mapping[str, Any]:
    section = _require(data, name, "configuration")
    if not isinstance(section, Mapping):
        raise ValidationError(f"'{name}' must be an object", code="E-CONFIG-FORMAT")
    return section


def _require(data: Mapping[str, Any], name: str, where: str) -> Any:
    if name not in data:
        raise ValidationError(f"Missing field '{name}' in {where}", code="E-CONFIG-FIELD")
    return data[name]


def _number(data: Mapping[str, Any], name: str) -> float:
    value = _require(data, name, "its section")
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ValidationError(f"Field '{name}' must be a finite number, got {value!r}", code="E-CONFIG-FIELD")
    return float(value)


def _integer(data: Mapping[str, Any], name: str, default: int) -> int:
    value = data.get(name, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"Field '{name}' must be an integer, got {value!r}", code="E-CONFIG-FIELD")
    return value


def _pair(value: Any) -> tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ValidationError("'data' must be a list of two numbers", code="E-DATA")
    return _vector(value, 2, "data")


def _vector(value: Any, length: int, name: str) -> tuple[float, ...]:
    if not isinstance(value, (list, tuple)) or len(value) > length:
        raise ValidationError(f"'{name}' must be a list of at most {length} numbers", code="E-DATA")
    numbers = []
    for item in value:
        if isinstance(item, bool) or not isinstance(item, (int, float)) or not math.isfinite(item):
            raise ValidationError(f"'{name}' entries must be finite numbers, got {item!r}", code="E-DATA")
        numbers.append(float(item))
    return tuple(numbers + [0.0] * (length - len(numbers)))
