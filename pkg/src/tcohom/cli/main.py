"""Entrypoint for tcohom."""

import argparse
from collections.abc import Callable
from logging import Logger

from tcohom.cohomo import InvalidTruncationError, RankToleranceError
from tcohom.errors import ConfigError, PreconditionError, TcohomError
from tcohom.lattice import InvalidLatticeError

from . import apply, check, classify, diagnose, solve, table
from ._common import (
    EXIT_CONFIG,
    EXIT_FAILURE,
    EXIT_PRECONDITION,
    RANK_HINT,
    RunConfig,
    add_config_args,
    legal_info,
    setup_logging,
)

type Run = Callable[[RunConfig, argparse.Namespace, Logger], int]

COMMANDS = {
    "classify": (classify, "Classify the lattice by the theta condition"),
    "apply": (apply, "Apply a differential operator to a form file"),
    "table": (table, "Compute cohomology tables"),
    "solve": (solve, "Solve for primitives of a form file"),
    "diagnose": (diagnose, "Print the small divisor decay profile"),
    "check": (check, "Run the seeded randomized self-checks"),
}


def build_parser() -> argparse.ArgumentParser:
    """Build the parser of every subcommand."""
    parser = argparse.ArgumentParser(
        description="Spectral calculus and cohomology of two-dimensional toroidal groups."
    )
    common = argparse.ArgumentParser(add_help=False)
    add_config_args(common)

    commands = parser.add_subparsers(dest="command", required=True)
    for name, (module, help_text) in COMMANDS.items():
        sub = commands.add_parser(name, parents=[common], help=help_text, description=help_text)
        module.add_parser(sub)
        sub.set_defaults(run=module.run)
    return parser


def main(args: tuple[str, ...] | None = None) -> None:
    """Entrypoint for the tcohom executable."""
    result = build_parser().parse_args(args)
    logger = setup_logging("tcohom", result.log)
    legal_info(logger)

    code = run(result.run, result, logger)
    if code:
        raise SystemExit(code)


def run(command: Run, args: argparse.Namespace, logger: Logger) -> int:
    """Run a subcommand and map its errors to exit codes."""
    try:
        config = RunConfig.from_args(args)
        code = command(config, args, logger)
    except (ConfigError, InvalidLatticeError, InvalidTruncationError, OSError) as err:
        logger.error("invalid configuration: %s", err)  # noqa: TRY400
        return EXIT_CONFIG
    except PreconditionError as err:
        logger.error("precondition %r violated: %s", err.predicate, err)  # noqa: TRY400
        return EXIT_PRECONDITION
    except RankToleranceError as err:
        logger.error("%s; %s", err, RANK_HINT)  # noqa: TRY400
        return EXIT_FAILURE
    except TcohomError as err:
        logger.error("%s", err)  # noqa: TRY400
        return EXIT_FAILURE
    return code


if __name__ == "__main__":
    main()
