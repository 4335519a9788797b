"""Command line entry point: ``fracwave`` / ``python -m cli``."""

import argparse
import dataclasses
import json
import logging
import sys
from typing import Any, TextIO

from cli.app.runner import run
from cli.domain.run_config import OutputSpec, ProblemKind, RunConfig, RunMode
from cli.domain.run_outcome import EXIT_DEGENERATE, EXIT_INVALID, EXIT_NUMERICAL, EXIT_OK, RunOutcome
from cli.infra.config_loader import load_config
from shared.exceptions.degenerate_system_error import DegenerateSystemError
from shared.exceptions.numerical_error import NumericalError
from shared.exceptions.source_error import SourceError
from shared.exceptions.validation_error import ValidationError
from special.domain.ml_query import MLQuery

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracwave",
        description="Closed-form solutions of Riemann-Liouville fractional wave problems, with numerical verification.",
    )
    parser.add_argument("--output-dir", default=None, help="Directory for reports (overrides output.dir).")
    parser.add_argument("--log-level", default="WARNING", choices=LOG_LEVELS, help="Logging threshold on stderr.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    ml_parser = subparsers.add_parser("ml", help="Mittag-Leffler function.")
    ml_sub = ml_parser.add_subparsers(dest="ml_command", required=True)
    eval_parser = ml_sub.add_parser("eval", help="Evaluate E_{alpha,beta}(z).")
    eval_parser.add_argument("--alpha", type=float, required=True)
    eval_parser.add_argument("--beta", type=float, required=True)
    eval_parser.add_argument("--z", type=float, required=True)

    solve_parser = subparsers.add_parser("solve", help="Solve a configured problem.")
    solve_parser.add_argument("kind", choices=[kind.value for kind in ProblemKind])
    solve_parser.add_argument("--config", required=True, help="Path to the JSON run configuration.")

    verify_parser = subparsers.add_parser("verify", help="Solve and verify a configured problem.")
    verify_parser.add_argument("--config", required=True, help="Path to the JSON run configuration.")
    verify_parser.add_argument("--grid-n", type=int, default=None, help="Intervals of the verification grid.")
    return parser


def _build_config(args: argparse.Namespace) -> RunConfig:
    if args.command == "ml":
        query = MLQuery(alpha=args.alpha, beta=args.beta, z=args.z)
        return RunConfig(mode=RunMode.ML_EVAL, kind=ProblemKind.SCALAR, query=query, output=_output(args, OutputSpec()))
    if args.command == "solve":
        mode = RunMode.SOLVE_SCALAR if args.kind == ProblemKind.SCALAR.value else RunMode.SOLVE_PDE
        config = load_config(args.config, mode)
    else:
        config = load_config(args.config, RunMode.VERIFY)
        if args.grid_n is not None:
            if args.grid_n < 2:
                raise ValidationError(f"--grid-n must be at least 2, got {args.grid_n}", code="E-GRID")
            config = dataclasses.replace(config, numerics=dataclasses.replace(config.numerics, grid_n=args.grid_n))
    return dataclasses.replace(config, output=_output(args, config.output))


def _output(args: argparse.Namespace, output: OutputSpec) -> OutputSpec:
    if args.output_dir is None:
        return output
    return dataclasses.replace(output, directory=args.output_dir)


def _emit_json(payload: Any, stream: TextIO) -> None:
    stream.write(json.dumps(payload, sort_keys=True))
    stream.write("\n")


def _diagnostic(code: str, message: str) -> None:
    _emit_json({"status": "error", "code": code, "message": message}, sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        outcome: RunOutcome = run(_build_config(args))
    except ValidationError as e:
        _diagnostic(e.code, str(e))
        return EXIT_INVALID
    except DegenerateSystemError as e:
        _diagnostic(e.code, str(e))
        return EXIT_DEGENERATE
    except (NumericalError, SourceError) as e:
        _diagnostic(e.code, str(e))
        return EXIT_NUMERICAL

    _emit_json(outcome.to_record(), sys.stdout)
    if outcome.exit_code != EXIT_OK:
        _diagnostic("E-VERIFY", outcome.message)
    return outcome.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
