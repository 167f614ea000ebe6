"""Entrypoint for tcohom check."""

import json
from argparse import ArgumentParser, Namespace
from logging import Logger

from tcohom.checks import SUITES, CheckContext, run_checks

from ._common import EXIT_FAILURE, EXIT_OK, OutputFormat, RunConfig


def add_parser(parser: ArgumentParser) -> None:
    """Add the arguments of the check subcommand."""
    parser.add_argument(
        "--suite",
        action="append",
        choices=list(SUITES),
        default=None,
        help="Suite to run, may be repeated. Defaults to every suite",
    )
    parser.add_argument(
        "--samples",
        type=int,
        default=8,
        help="Random forms drawn per case",
    )


def run(config: RunConfig, args: Namespace, logger: Logger) -> int:
    """Run the randomized suites and print their status."""
    context = CheckContext(
        config.lattice, config.trunc, config.seed, logger, samples=args.samples
    )
    results = run_checks(context, args.suite)

    if config.format is OutputFormat.JSON:
        data = [
            {
                "suite": r.name,
                "status": r.status,
                "cases": r.cases,
                "failures": list(r.failures),
            }
            for r in results
        ]
        text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    elif config.format is OutputFormat.CSV:
        lines = ["suite,status,cases,failures"]
        lines.extend(f"{r.name},{r.status},{r.cases},{len(r.failures)}" for r in results)
        text = "\n".join(lines) + "\n"
    else:
        text = "".join(f"{r.status} {r.name} ({r.cases} cases)\n" for r in results)
    config.emit(f"checks.{config.extension}", text)

    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILURE
