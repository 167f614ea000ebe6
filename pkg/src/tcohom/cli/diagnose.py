"""Entrypoint for tcohom diagnose."""

import json
from argparse import ArgumentParser, Namespace
from logging import Logger

from tcohom.lattice import classify_theta, divisor_decay_profile, summarize_decay

from ._common import EXIT_OK, OutputFormat, RunConfig


def _shells(value: str) -> int:
    n = int(value)
    if n < 0:
        msg = f"expected a nonnegative number of shells, got {n}"
        raise ValueError(msg)
    return n


def add_parser(parser: ArgumentParser) -> None:
    """Add the arguments of the diagnose subcommand."""
    parser.add_argument(
        "--shells",
        type=_shells,
        default=20,
        help="Number of mode shells to scan",
    )


def run(config: RunConfig, args: Namespace, logger: Logger) -> int:
    """Print the smallest divisor |A^σ| of every shell and the fitted envelope c/n."""
    profile = divisor_decay_profile(config.lattice, args.shells)
    kind = summarize_decay(profile, classify_theta(config.lattice))
    logger.info("summary: %s decay (c = %r)", kind, profile.envelope_c)

    if config.format is OutputFormat.JSON:
        data = {
            "rows": [
                {"n": n, "min_abs_A": v, "fitted_envelope": profile.envelope_c / n}
                for n, v in profile.rows
            ],
            "envelope_c": profile.envelope_c,
            "summary": str(kind),
        }
        text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    else:
        text = profile.to_csv()
    config.emit(f"profile.{'json' if config.format is OutputFormat.JSON else 'csv'}", text)
    return EXIT_OK
