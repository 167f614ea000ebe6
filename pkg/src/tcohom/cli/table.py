"""Entrypoint for tcohom table."""

from argparse import ArgumentParser, Namespace
from logging import Logger

from tcohom.cohomo import (
    ComplexEngine,
    Theory,
    nondeldelbar_from_tables,
    render_csv,
    render_diamond,
    render_json,
)

from ._common import EXIT_OK, OutputFormat, RunConfig

# spellchecker:words delconj

ALL = "all"


def add_parser(parser: ArgumentParser) -> None:
    """Add the arguments of the table subcommand."""
    parser.add_argument(
        "--theory",
        choices=[*(str(t) for t in Theory), ALL],
        default=ALL,
        help="Cohomology theory to compute, or all of them with the derived scalars",
    )


def run(config: RunConfig, args: Namespace, logger: Logger) -> int:
    """Compute and render one or all cohomology tables."""
    engine = ComplexEngine(
        config.lattice, config.trunc, logger, config.method, config.convention
    )
    theories = list(Theory) if args.theory == ALL else [Theory(args.theory)]
    tables = {theory: engine.table(theory) for theory in theories}

    delta: dict[int, int] | None = None
    if args.theory == ALL:
        delta = nondeldelbar_from_tables(
            tables[Theory.BOTT_CHERN], tables[Theory.AEPPLI], tables[Theory.DERHAM]
        )

    match config.format:
        case OutputFormat.CSV:
            text = render_csv(*tables.values())
        case OutputFormat.JSON:
            extra: dict[str, object] | None = None
            if delta is not None:
                extra = {
                    "delta": [delta[k] for k in range(5)],
                    "h_T_11": tables[Theory.THIRD][1, 1],
                }
            text = render_json(*tables.values(), extra=extra)
        case OutputFormat.TEXT:
            text = "\n".join(render_diamond(table) for table in tables.values())
            if delta is not None:
                text += "\nDelta = " + ",".join(str(delta[k]) for k in range(5)) + "\n"
                text += f"h_T^(1,1)+1 = {tables[Theory.THIRD][1, 1]}\n"
    config.emit(f"table.{config.extension}", text)
    return EXIT_OK
