import json
from pathlib import Path
from typing import Any, Mapping

from cli.domain.run_config import RunConfig, RunMode
from shared.exceptions.validation_error import ValidationError
from solvers.infra.source_registry import SourceRegistry
from spectral.domain.spectrum_provider import SpectrumProvider
from spectral.infra.dirichlet_laplacian import DirichletLaplacian
from spectral.infra.tabulated_spectrum import TabulatedSpectrum


def load_config(path: str | Path, mode: RunMode | str | None = None) -> RunConfig:
    """
    Read and validate a JSON run configuration.

    Table sources are resolved relative to the configuration file.

    Args:
        path: Path to the JSON document
        mode: Optional mode override from the command line

    Returns:
        The validated RunConfig

    Raises:
        ValidationError: If the file cannot be read or parsed (E-CONFIG-FORMAT) or is invalid
    """
    config_path = Path(path)
    try:
        with config_path.open("r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as e:
        raise ValidationError(f"Cannot read configuration {config_path}: {str(e)}", code="E-CONFIG-FORMAT")
    except json.JSONDecodeError as e:
        raise ValidationError(f"Configuration {config_path} is not valid JSON: {str(e)}", code="E-CONFIG-FORMAT")
    registry = SourceRegistry(config_path.resolve().parent)
    return RunConfig.from_dict(data, registry.build, mode)


def build_provider(operator: Mapping[str, Any]) -> SpectrumProvider:
    """
    Build the spectrum provider described by the configuration's operator block.

    Raises:
        ValidationError: If the block is incomplete (E-OPERATOR)
    """
    kind = operator.get("kind", "dirichlet")
    try:
        if kind == "dirichlet":
            if "length" in operator:
                return DirichletLaplacian(float(operator["length"]))
            return DirichletLaplacian()
        if kind == "tabulated":
            return TabulatedSpectrum(
                eigenvalues=operator["eigenvalues"],
                eigenfunctions=operator["eigenfunctions"],
                nodes=operator["nodes"],
                weights=operator["weights"],
                domain=tuple(operator["domain"]),
            )
    except (KeyError, TypeError, ValueError) as e:
        raise ValidationError(f"Invalid operator block: {str(e)}", code="E-OPERATOR")
    raise ValidationError(f"Unknown operator kind {kind!r}", code="E-OPERATOR")
