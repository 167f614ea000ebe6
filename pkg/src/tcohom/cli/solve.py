"""Entrypoint for tcohom solve."""

import json
from argparse import ArgumentParser, Namespace
from collections.abc import Callable
from logging import Logger
from pathlib import Path
from sys import stdout
from typing import Final

from tcohom.primitives import PrimitiveSolution, PrimitiveSolver
from tcohom.specform import SpectralForm, load_form, serialize_form

from ._common import EXIT_OK, OutputFormat, RunConfig

# spellchecker:words deldelbar umeno

type Solve = Callable[[PrimitiveSolver, SpectralForm, bool], PrimitiveSolution]

SOLVERS: Final[dict[str, tuple[Solve, tuple[str, ...]]]] = {
    "umeno": (lambda s, w, _: s.umeno_decompose(w), ("psi",)),
    "deldelbar": (lambda s, w, _: s.deldelbar_primitive(w), ("eta",)),
    "dolbeault": (lambda s, w, _: s.dolbeault_primitive(w), ("eta",)),
    "aeppli00": (lambda s, w, _: s.aeppli00_reduce(w), ("absorbed",)),
    "aeppli01": (lambda s, w, _: s.aeppli01_primitive(w), ("psi", "eta")),
    "aeppli10": (lambda s, w, _: s.aeppli10_primitive(w), ("psi", "eta")),
    "aeppli11": (lambda s, w, cover: s.aeppli11_primitive(w, cover=cover), ("psi1", "psi2")),
}
"""solver and the names of its primitives"""

NOISE: Final = 1e-12


def add_parser(parser: ArgumentParser) -> None:
    """Add the arguments of the solve subcommand."""
    parser.add_argument(
        "input",
        help="Path to the form file",
    )
    parser.add_argument(
        "--solver",
        required=True,
        choices=list(SOLVERS),
        help="Equation to solve",
    )
    parser.add_argument(
        "--cover",
        default=False,
        action="store_true",
        help="Use the closed-form primitives on the universal cover (aeppli11 only)",
    )


def _number(c: complex) -> str:
    """A short deterministic rendering, rounding noise to zero."""
    re = 0.0 if abs(c.real) < NOISE else c.real
    im = 0.0 if abs(c.imag) < NOISE else c.imag
    if im == 0:
        return f"{re:.12g}"
    return f"{re:.12g}{im:+.12g}i"


def _summary(solution: PrimitiveSolution) -> dict[str, object]:
    return {
        "residual": {
            label: _number(c)
            for label, c in solution.residual_coefficients().items()
        },
        "recomposition_error": solution.recomposition_error(),
        "cover": str(solution.cover_flag),
        "certificate": solution.certificate.to_json(),
    }


def run(config: RunConfig, args: Namespace, logger: Logger) -> int:
    """Solve for primitives and write primitive, residual and certificate files."""
    if args.cover and args.solver != "aeppli11":
        logger.warning("--cover only applies to aeppli11, ignoring it")

    form = load_form(Path(args.input), config.lattice)
    solver = PrimitiveSolver(config.lattice, config.trunc, logger, config.convention)
    solve, names = SOLVERS[args.solver]
    solution = solve(solver, form, args.cover)

    output = config.output or Path()
    output.mkdir(parents=True, exist_ok=True)
    for name, primitive in zip(names, solution.primitives, strict=False):
        (output / f"{name}.json").write_text(serialize_form(primitive), encoding="utf-8")
    for name, lifted in zip(names, solution.cover_primitives, strict=False):
        if not lifted.is_periodic:
            (output / f"{name}.linear.json").write_text(
                serialize_form(lifted.linear), encoding="utf-8"
            )
    (output / "residual.json").write_text(serialize_form(solution.residual), encoding="utf-8")

    summary = _summary(solution)
    (output / "certificate.json").write_text(
        json.dumps(summary, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
    logger.info("wrote the solution of %s into %s", args.solver, output)

    if config.format is OutputFormat.JSON:
        stdout.write(json.dumps(summary, sort_keys=True, indent=2) + "\n")
    else:
        lines = [f"{label} = {_number(c)}" for label, c in solution.residual_coefficients().items()]
        lines.append(f"cover = {solution.cover_flag}")
        lines.append(f"certificate = {solution.certificate.kind}")
        stdout.write("\n".join(lines) + "\n")
    return EXIT_OK
