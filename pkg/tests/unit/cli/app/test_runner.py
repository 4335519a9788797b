import csv
import dataclasses
import json
import math
from pathlib import Path

import pytest

from cli.app.runner import RunPipeline, run, spatial_function
from cli.domain.run_config import OutputSpec, RunConfig, RunMode
from cli.infra.config_loader import load_config
from shared.exceptions.degenerate_system_error import DegenerateSystemError
from shared.settings import NumericalSettings

CONFIG_DIR = Path(__file__).parents[4] / "configs"


def configured(name: str, directory: Path, mode: RunMode | None = None) -> RunConfig:
    """Load an example configuration and redirect its reports to directory."""
    config = load_config(CONFIG_DIR / name, mode)
    return dataclasses.replace(config, output=OutputSpec(directory=str(directory), prefix="case"))


@pytest.fixture
def settings():
    return NumericalSettings(max_workers=2)


class TestScalarRuns:
    """Test cases for scalar pipelines."""

    def test_should_solve_classical_cauchy_problem(self, tmp_path, settings):
        """Test u = cos t, ending at u(pi) = -1."""
        outcome = run(configured("cauchy_classical.json", tmp_path), settings)
        assert outcome.exit_code == 0
        assert [path.name for path in outcome.files] == ["case_solution.json", "case_samples.csv"]
        solution = json.loads((tmp_path / "case_solution.json").read_text())
        assert (solution["C1"], solution["C2"]) == (0.0, 1.0)
        with open(tmp_path / "case_samples.csv", newline="") as handle:
            rows = list(csv.DictReader(handle))
        assert len(rows) == 100
        assert float(rows[-1]["t"]) == pytest.approx(math.pi)
        assert float(rows[-1]["u"]) == pytest.approx(-1.0, abs=1e-8)

    def test_should_write_identical_bytes_on_repeated_runs(self, tmp_path, settings):
        """Test that reports are byte-stable."""
        first = run(configured("inner_derived.json", tmp_path / "first"), settings)
        second = run(configured("inner_derived.json", tmp_path / "second"), settings)
        for left, right in zip(first.files, second.files):
            assert left.read_bytes() == right.read_bytes()
        assert [path.name for path in first.files] == ["case_conditions.json", "case_solution.json", "case_samples.csv"]

    def test_should_write_condition_report_before_raising_degeneracy(self, tmp_path, settings):
        """Test the degenerate inner-boundary example."""
        with pytest.raises(DegenerateSystemError):
            run(configured("inner_boundary_degenerate.json", tmp_path), settings)
        report = json.loads((tmp_path / "case_conditions.json").read_text())
        assert report["solvable"] is False
        assert report["power_free_solvable"] is False

    def test_should_verify_classical_cauchy_problem(self, tmp_path, settings):
        """Test the residual and initial-functional checks."""
        pipeline = RunPipeline(configured("cauchy_classical.json", tmp_path, RunMode.VERIFY), settings)
        outcome = pipeline.run()
        assert outcome.ok
        assert pipeline.settings.grid_n == 1000
        verification = json.loads((tmp_path / "case_verification.json").read_text())
        assert verification["passed"] is True
        assert verification["functionals"]["targets"] == [1.0, 0.0]

    def test_should_verify_inner_conditions(self, tmp_path, settings):
        """Test that the solved inner problem reproduces its data."""
        run(configured("inner_derived.json", tmp_path, RunMode.VERIFY), settings)
        verification = json.loads((tmp_path / "case_verification.json").read_text())
        assert verification["functionals"]["max_rel_error"] <= 1e-8


class TestPdeRuns:
    """Test cases for spectral pipelines."""

    def test_should_verify_classical_wave(self, tmp_path, settings):
        """Test a two-mode standing wave with finite stability ratios."""
        document = {
            "mode": "verify",
            "problem": {
                "kind": "pde",
                "family": "cauchy",
                "alpha": 2.0,
                "beta": 0.0,
                "gamma": 1.0,
                "t_end": math.pi,
                "n_modes": 2,
                "u1": [1.0, 0.5],
            },
            "numerics": {"grid_n": 1000, "samples": 11, "x_samples": 5},
            "output": {"dir": str(tmp_path), "prefix": "wave"},
        }
        path = tmp_path / "wave.json"
        path.write_text(json.dumps(document))
        outcome = run(load_config(path), settings)
        assert outcome.exit_code == 0
        verification = json.loads((tmp_path / "wave_verification.json").read_text())
        assert verification["N"] == 2
        assert verification["stability_ratios"]["u"] == pytest.approx(math.pi / 2, rel=1e-8)
        with open(tmp_path / "wave_samples.csv", newline="") as handle:
            assert sum(1 for _ in handle) == 1 + 10 * 5

    def test_should_solve_example_wave_problem(self, tmp_path, settings):
        """Test the fractional example with a singular separable source."""
        outcome = run(configured("wave_cauchy.json", tmp_path), settings)
        assert outcome.ok
        solution = json.loads((tmp_path / "case_solution.json").read_text())
        assert solution["N"] == 8
        assert (tmp_path / "case_samples.csv").exists()


class TestSpatialFunction:
    """Test cases for coefficient-defined spatial profiles."""

    def test_should_sum_weighted_eigenfunctions(self, dirichlet):
        """Test h = 2 e_2."""
        h = spatial_function(dirichlet, (0.0, 2.0))
        assert float(h(1.0)) == pytest.approx(2.0 * math.sqrt(2.0 / math.pi) * math.sin(2.0))
