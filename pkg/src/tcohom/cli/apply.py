"""Entrypoint for tcohom apply."""

from argparse import ArgumentParser, Namespace
from logging import Logger
from pathlib import Path

from tcohom.calculus import OperatorKind, apply
from tcohom.specform import load_form, serialize_form

from ._common import EXIT_OK, RunConfig

OPERATORS = (OperatorKind.DEL, OperatorKind.DELBAR, OperatorKind.D, OperatorKind.DELDELBAR)


def add_parser(parser: ArgumentParser) -> None:
    """Add the arguments of the apply subcommand."""
    parser.add_argument(
        "input",
        help="Path to the form file",
    )
    parser.add_argument(
        "--op",
        required=True,
        choices=[str(op) for op in OPERATORS],
        help="Operator to apply",
    )


def run(config: RunConfig, args: Namespace, logger: Logger) -> int:
    """Apply an operator to a form file and write the image as a form file."""
    form = load_form(Path(args.input), config.lattice)
    image = apply(OperatorKind(args.op), form)
    logger.info(
        "%s of a form with %d entries has %d entries", args.op, len(form), len(image)
    )
    config.emit("image.json", serialize_form(image))
    return EXIT_OK
