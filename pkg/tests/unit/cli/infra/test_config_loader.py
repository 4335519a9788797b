import json

import pytest

from cli.domain.run_config import RunMode
from cli.infra.config_loader import build_provider, load_config
from shared.exceptions.validation_error import ValidationError
from spectral.infra.dirichlet_laplacian import DirichletLaplacian
from spectral.infra.tabulated_spectrum import TabulatedSpectrum


class TestLoadConfig:
    """Test cases for reading configuration files."""

    def test_should_resolve_table_source_next_to_config(self, tmp_path):
        """Test a config with a CSV source in the same directory."""
        (tmp_path / "forcing.csv").write_text("t,f\n0,1\n1,1\n")
        document = {
            "mode": "solve_scalar",
            "problem": {
                "family": "cauchy",
                "alpha": 2.0,
                "beta": 0.0,
                "gamma": 1.0,
                "m": -1.0,
                "t_end": 1.0,
                "data": [1.0, 0.0],
                "source": {"tag": "table", "path": "forcing.csv"},
            },
        }
        path = tmp_path / "config.json"
        path.write_text(json.dumps(document))
        config = load_config(path, RunMode.VERIFY)
        assert config.mode is RunMode.VERIFY
        assert config.scalar.source(0.5) == pytest.approx(1.0)

    def test_should_raise_error_for_invalid_json(self, tmp_path):
        """Test that parse errors are reported as format errors."""
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ValidationError) as exc_info:
            load_config(path)
        assert exc_info.value.code == "E-CONFIG-FORMAT"

    def test_should_raise_error_for_missing_file(self, tmp_path):
        """Test that unreadable files are reported as format errors."""
        with pytest.raises(ValidationError) as exc_info:
            load_config(tmp_path / "absent.json")
        assert exc_info.value.code == "E-CONFIG-FORMAT"


class TestBuildProvider:
    """Test cases for operator blocks."""

    def test_should_build_dirichlet_laplacian(self):
        """Test the default and an explicit length."""
        assert isinstance(build_provider({"kind": "dirichlet"}), DirichletLaplacian)
        assert build_provider({"kind": "dirichlet", "length": 2.0}).length == 2.0

    def test_should_build_tabulated_spectrum(self):
        """Test a two-node table."""
        provider = build_provider(
            {
                "kind": "tabulated",
                "eigenvalues": [1.0],
                "eigenfunctions": [[1.0, 1.0]],
                "nodes": [0.25, 0.75],
                "weights": [0.5, 0.5],
                "domain": [0.0, 1.0],
            }
        )
        assert isinstance(provider, TabulatedSpectrum)
        assert provider.orthonormality_defect() == pytest.approx(0.0)

    @pytest.mark.parametrize("operator", [{"kind": "tabulated", "eigenvalues": [1.0]}, {"kind": "neumann"}])
    def test_should_raise_error_for_invalid_operator(self, operator):
        """Test incomplete blocks and unknown kinds."""
        with pytest.raises(ValidationError) as exc_info:
            build_provider(operator)
        assert exc_info.value.code == "E-OPERATOR"
