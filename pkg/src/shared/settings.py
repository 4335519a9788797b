import os
from dataclasses import dataclass, replace
from typing import Mapping

from shared.exceptions.validation_error import ValidationError

THREADS_ENV_VAR = "FRACWAVE_THREADS"


@dataclass(frozen=True)
class NumericalSettings:
    """Immutable numerical defaults shared by the solvers and the CLI."""

    degeneracy_epsilon: float = 1e-10
    quad_n: int = 512
    t_min_fraction: float = 0.05
    grid_n: int = 1000
    time_quad_n: int = 32
    max_workers: int | None = None

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> "NumericalSettings":
        """
        Create settings with the worker cap read from the environment.

        Args:
            environ: Mapping to read instead of ``os.environ``

        Returns:
            A NumericalSettings instance

        Raises:
            ValidationError: If FRACWAVE_THREADS is not a positive integer
        """
        environ = os.environ if environ is None else environ
        raw = environ.get(THREADS_ENV_VAR)
        if raw is None or raw.strip() == "":
            return cls()
        try:
            threads = int(raw)
        except ValueError:
            raise ValidationError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}", code="E-THREADS")
        if threads < 1:
            raise ValidationError(f"{THREADS_ENV_VAR} must be positive, got {threads}", code="E-THREADS")
        return cls(max_workers=threads)

    def with_overrides(self, **changes) -> "NumericalSettings":
        """Return a copy with the given fields replaced (None values are ignored)."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


DEFAULT_SETTINGS = NumericalSettings()
