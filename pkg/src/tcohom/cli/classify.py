"""Entrypoint for tcohom classify."""

import json
from argparse import ArgumentParser, Namespace
from logging import Logger

from tcohom.lattice import Classification, ClassifyOptions, classify_theta

from ._common import EXIT_INCONCLUSIVE, EXIT_OK, OutputFormat, RunConfig


def add_parser(parser: ArgumentParser) -> None:
    """Add the arguments of the classify subcommand."""
    parser.add_argument(
        "--max-n",
        type=int,
        default=ClassifyOptions.max_n,
        help="Largest n of the brute-force distance scan",
    )


def run(config: RunConfig, args: Namespace, logger: Logger) -> int:
    """Classify the lattice by the theta condition and print the certificate."""
    certificate = classify_theta(config.lattice, ClassifyOptions(max_n=args.max_n))
    logger.info("lattice classified %s by %s", certificate.classification, certificate.method)

    match config.format:
        case OutputFormat.CSV:
            text = certificate.to_csv()
        case OutputFormat.JSON:
            data = {
                "classification": str(certificate.classification),
                "C_est": certificate.c_est,
                "delta_est": certificate.delta_est,
                "method": str(certificate.method),
                "precision": certificate.precision,
                "diagnostic": certificate.diagnostic,
                "samples": [list(sample) for sample in certificate.samples],
            }
            text = json.dumps(data, sort_keys=True, indent=2) + "\n"
        case OutputFormat.TEXT:
            lines = [
                f"classification: {certificate.classification}",
                f"C_est: {certificate.c_est!r}",
                f"delta_est: {certificate.delta_est!r}",
                f"method: {certificate.method}",
                f"precision: {certificate.precision}",
            ]
            if certificate.diagnostic:
                lines.append(f"diagnostic: {certificate.diagnostic}")
            text = "\n".join(lines) + "\n"
    config.emit(f"certificate.{config.extension}", text)

    if certificate.classification is Classification.INCONCLUSIVE:
        logger.warning("classification is inconclusive: %s", certificate.diagnostic)
        return EXIT_INCONCLUSIVE
    return EXIT_OK
