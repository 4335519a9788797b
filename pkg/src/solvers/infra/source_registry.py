from pathlib import Path
from typing import Any, Callable, Mapping

import numpy as np

from shared.exceptions.source_error import SourceError
from shared.exceptions.validation_error import ValidationError
from solvers.domain.source_term import SourceTerm


class SourceRegistry:
    """Builds SourceTerm instances from tagged JSON descriptors.

    Supported tags: zero, constant, power, exp, table and combination. Table
    paths are resolved against ``base_dir``.
    """

    def __init__(self, base_dir: str | Path | None = None):
        """
        Initialize the registry.

        Args:
            base_dir: Directory that relative table paths are resolved against.
                      Defaults to the current working directory.
        """
        self._base_dir = Path(base_dir) if base_dir is not None else Path.cwd()
        self._builders: dict[str, Callable[[Mapping[str, Any]], SourceTerm]] = {
            "zero": lambda d: SourceTerm.zero(),
            "constant": lambda d: SourceTerm.constant(_param(d, "value")),
            "power": lambda d: SourceTerm.power(_param(d, "exponent"), _param(d, "scale", 1.0)),
            "exp": lambda d: SourceTerm.exponential(_param(d, "rate"), _param(d, "scale", 1.0)),
            "table": self._table,
            "combination": self._combination,
        }

    @property
    def tags(self) -> list[str]:
        return sorted(self._builders)

    def build(self, descriptor: Mapping[str, Any] | None) -> SourceTerm:
        """
        Build the source described by ``descriptor``; None means f = 0.

        Raises:
            ValidationError: If the tag is unknown (E-SOURCE-TAG) or a parameter is invalid
            SourceError: If a table file cannot be read
        """
        if descriptor is None:
            return SourceTerm.zero()
        if not isinstance(descriptor, Mapping):
            raise ValidationError("Source descriptor must be an object with a 'tag'", code="E-SOURCE-TAG")
        tag = descriptor.get("tag")
        builder = self._builders.get(tag)
        if builder is None:
            raise ValidationError(f"Unknown source tag {tag!r}; expected one of {self.tags}", code="E-SOURCE-TAG")
        return builder(descriptor)

    def _table(self, descriptor: Mapping[str, Any]) -> SourceTerm:
        path = descriptor.get("path")
        if not isinstance(path, str) or not path:
            raise ValidationError("Table source needs a 'path' to a CSV file with columns t,f", code="E-SOURCE-PARAM")
        resolved = Path(path) if Path(path).is_absolute() else self._base_dir / path
        try:
            table = np.genfromtxt(resolved, delimiter=",", names=True, dtype=float)
            times, values = np.atleast_1d(table["t"]), np.atleast_1d(table["f"])
        except (OSError, ValueError) as e:
            raise SourceError(f"Failed to load source table {resolved}: {str(e)}")
        return SourceTerm.tabulated(times, values, params={"path": path})

    def _combination(self, descriptor: Mapping[str, Any]) -> SourceTerm:
        terms = descriptor.get("terms")
        if not isinstance(terms, list) or not terms:
            raise ValidationError("Combination source needs a non-empty 'terms' list", code="E-SOURCE-PARAM")
        built = []
        for term in terms:
            inner = {k: v for k, v in term.items() if k != "coefficient"}
            built.append((_param(term, "coefficient", 1.0), self.build(inner)))
        return SourceTerm.combination(built)


def build_source(descriptor: Mapping[str, Any] | None, base_dir: str | Path | None = None) -> SourceTerm:
    """Build a source with a registry rooted at base_dir."""
    return SourceRegistry(base_dir).build(descriptor)


def _param(descriptor: Mapping[str, Any], name: str, default: float | None = None) -> float:
    value = descriptor.get(name, default)
    if value is None:
        raise ValidationError(f"Source '{descriptor.get('tag')}' is missing parameter '{name}'", code="E-SOURCE-PARAM")
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"Source parameter '{name}' must be a number, got {value!r}", code="E-SOURCE-PARAM")
    return float(value)
