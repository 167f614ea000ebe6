"""Shared cli functionality."""

from argparse import ArgumentParser, Namespace
from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from logging import CRITICAL, DEBUG, Logger, basicConfig, getLogger
from os import environ
from pathlib import Path
from sys import stdout
from typing import Final, final

from piplicenses_lib import FromArg, get_packages

from tcohom.cohomo import AeppliConvention, RankMethod, Truncation
from tcohom.errors import ConfigError
from tcohom.lattice import DEFAULT_PRECISION, Lattice, load_lattice

# spellchecker:words piplicenses

EXIT_OK: Final = 0
EXIT_FAILURE: Final = 1
EXIT_INCONCLUSIVE: Final = 2
EXIT_PRECONDITION: Final = 3
EXIT_CONFIG: Final = 64

RANK_HINT: Final = "raise --precision or loosen --tol"


def legal_info(logger: Logger) -> None:
    """Log legal information."""
    logger.info("tcohom, spectral cohomology of toroidal groups. ")
    if logger.level > DEBUG:
        logger.info("Set log level to DEBUG to view licensing information. ")
        return

    for package in get_packages(FromArg.META):
        logger.debug(
            "package %s by %s licensed under %s",
            package.name,
            package.author,
            package.license,
        )
        text = _first(package.license_texts)
        logger.debug(text)


def _first[T](items: Iterable[T]) -> T | None:
    """Return the first value contained in an iterator or None."""
    for item in items:
        return item
    return None


def add_logging_arg(parser: ArgumentParser) -> None:
    """Add a logging argument to the given parser."""
    parser.add_argument(
        "-l",
        "--log",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default="INFO",
        help="Set logging level",
    )


def setup_logging(name: str, level: str) -> Logger:
    """Perform global logging config and setup a new logger with the given name and level."""
    basicConfig()

    # turn down the verbosity of the root logger
    getLogger("root").setLevel(CRITICAL)

    # and get our logger!
    logger = getLogger(name)
    logger.setLevel(level)

    return logger


class OutputFormat(StrEnum):
    """Rendering of the results written to stdout or --output."""

    TEXT = "text"
    CSV = "csv"
    JSON = "json"


def add_config_args(parser: ArgumentParser) -> None:
    """Add the flags shared by every subcommand."""
    parser.add_argument(
        "--lattice",
        default=environ.get("TCOHOM_LATTICE"),
        help="Lattice file to use. Defaults to $TCOHOM_LATTICE or tau = i, p = sqrt(2), q = 0",
    )
    parser.add_argument(
        "--trunc",
        default=environ.get("TCOHOM_TRUNC", "2,2,2"),
        help="Truncation N,K,M of modes, powers of t4 and exponentials",
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=None,
        help="Relative rank tolerance",
    )
    parser.add_argument(
        "--precision",
        default=environ.get("TCOHOM_PRECISION", str(DEFAULT_PRECISION)),
        help="Working precision in bits for the classification. Defaults to $TCOHOM_PRECISION",
    )
    parser.add_argument(
        "--format",
        "-f",
        choices=[str(f) for f in OutputFormat],
        default=str(OutputFormat.TEXT),
        help="Format of the output",
    )
    parser.add_argument(
        "--output",
        "-o",
        default=None,
        help="Directory to write output files to. Defaults to STDOUT.",
    )
    parser.add_argument(
        "--method",
        choices=[str(m) for m in RankMethod],
        default=str(RankMethod.NUMERIC),
        help="Numeric (SVD) or exact ranks",
    )
    parser.add_argument(
        "--aeppli-convention",
        choices=[str(c) for c in AeppliConvention],
        default=str(AeppliConvention.FORMAL),
        help="Which primitives the Aeppli quotients admit at the zero mode",
    )
    parser.add_argument(
        "--seed",
        default=environ.get("TCOHOM_SEED", "0"),
        help="Seed of the randomized checks. Defaults to $TCOHOM_SEED",
    )
    add_logging_arg(parser)


def _int(value: str, name: str) -> int:
    try:
        return int(value)
    except ValueError:
        msg = f"expected an integer, got {value!r}"
        raise ConfigError(name, msg) from None


@final
@dataclass(frozen=True)
class RunConfig:
    """Configuration of a single run, assembled from flags and environment."""

    lattice: Lattice
    lattice_path: Path | None
    trunc: Truncation
    precision: int
    format: OutputFormat
    output: Path | None
    seed: int
    method: RankMethod
    convention: AeppliConvention

    @classmethod
    def from_args(cls, args: Namespace) -> "RunConfig":
        """Assemble a configuration from parsed arguments."""
        precision = _int(args.precision, "precision")

        path = Path(args.lattice) if args.lattice else None
        if path is None:
            lattice = Lattice.default().with_precision(precision)
        else:
            lattice = load_lattice(path, precision)

        return cls(
            lattice=lattice,
            lattice_path=path,
            trunc=Truncation.parse(args.trunc, args.tol),
            precision=precision,
            format=OutputFormat(args.format),
            output=Path(args.output) if args.output is not None else None,
            seed=_int(args.seed, "seed"),
            method=RankMethod(args.method),
            convention=AeppliConvention(args.aeppli_convention),
        )

    def emit(self, name: str, text: str) -> None:
        """Write text to stdout, or into the file name of the output directory."""
        if self.output is None:
            stdout.write(text)
            return
        self.output.mkdir(parents=True, exist_ok=True)
        (self.output / name).write_text(text, encoding="utf-8")

    @property
    def extension(self) -> str:
        """File extension of the output format."""
        return {"text": "txt", "csv": "csv", "json": "json"}[self.format]
