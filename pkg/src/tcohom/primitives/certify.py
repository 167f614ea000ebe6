"""convergence certificates for the mode sums of primitives."""

from collections.abc import Callable, Mapping
from dataclasses import dataclass
from enum import StrEnum
from math import isfinite
from typing import Final, final

import numpy as np

from tcohom.lattice import (
    Classification,
    DiophantineCertificate,
    Lattice,
    Mode,
    divisor_constant,
    mode_multiplier_a,
)

# spellchecker:words majorant


class BoundKind(StrEnum):
    """How the convergence of a primitive was established."""

    FINITE_INPUT = "FiniteInput"
    GEOMETRIC_MAJORANT = "GeometricMajorant"
    NOT_CERTIFIED = "NotCertified"


@final
@dataclass(frozen=True)
class ConvergenceCertificate:
    """Evidence for convergence of Σ_{σ₂≠0} |a^σ| / |A^σ|.

    shell_sums[r - 1] is the partial sum over the modes of radius at most r.
    A GeometricMajorant bounds every partial sum by majorant.
    """

    kind: BoundKind
    d: float
    delta: float | None
    shell_sums: tuple[float, ...]
    majorant: float | None = None
    rho: float | None = None
    """fitted geometric decay rate of the amplitudes"""

    def to_json(self) -> dict[str, object]:
        """A JSON-ready description."""
        return {
            "kind": str(self.kind),
            "D": self.d,
            "delta": self.delta,
            "shell_sums": list(self.shell_sums),
            "majorant": self.majorant,
        }


DEFAULT_SHELLS: Final = 6


def _shell_counts(x: float) -> float:
    """Σ_{r ≥ 1} #{σ : |σ|∞ = r}·xʳ for 0 ≤ x < 1; the shell of radius r has 24r² + 2 modes."""
    return 24 * x * (1 + x) / (1 - x) ** 3 + 2 * x / (1 - x)


def _shell_sums(
    lattice: Lattice, amplitudes: Mapping[Mode, float], shells: int
) -> tuple[float, ...]:
    totals = np.zeros(shells)
    for mode, amplitude in amplitudes.items():
        if mode.s2 == 0 or not 1 <= mode.radius <= shells:
            continue
        totals[mode.radius - 1] += amplitude / abs(mode_multiplier_a(lattice, mode))
    return tuple(float(x) for x in np.cumsum(totals))


def certify_convergence(
    amplitudes: Mapping[Mode, float] | Callable[[Mode], float],
    lattice: Lattice,
    certificate: DiophantineCertificate | None,
    *,
    shells: int = DEFAULT_SHELLS,
) -> ConvergenceCertificate:
    """Certify convergence of Σ_{σ₂≠0} |a^σ| / |A^σ|.

    A mapping describes finitely many modes and is always convergent.
    A callable describes every mode; it is certified when the lattice is theta with witness (C, δ)
    and the amplitudes decay like α·ρ^{|σ|∞} with ρ < δ, using 1/|A^σ| ≤ D / (C·δ^{|σ₂|}).
    """
    d = divisor_constant(lattice)
    theta = certificate is not None and certificate.classification is Classification.THETA
    delta = certificate.delta_est if certificate is not None and theta else None

    if isinstance(amplitudes, Mapping):
        radius = max((m.radius for m in amplitudes), default=0)
        sums = _shell_sums(lattice, amplitudes, max(radius, 1))
        return ConvergenceCertificate(BoundKind.FINITE_INPUT, d, delta, sums)

    if shells < 2:  # noqa: PLR2004
        msg = f"need at least two shells to fit a decay rate, got {shells}"
        raise ValueError(msg)
    modes = [
        Mode(a, b, c)
        for a in range(-shells, shells + 1)
        for b in range(-shells, shells + 1)
        for c in range(-shells, shells + 1)
        if b != 0
    ]
    values = {mode: abs(amplitudes(mode)) for mode in modes}
    sums = _shell_sums(lattice, values, shells)
    if certificate is None or delta is None:
        return ConvergenceCertificate(BoundKind.NOT_CERTIFIED, d, None, sums)

    peaks = [max(v for m, v in values.items() if m.radius == r) for r in range(1, shells + 1)]
    if peaks[0] <= 0:
        return ConvergenceCertificate(BoundKind.FINITE_INPUT, d, delta, sums)

    # fit peaks[r - 1] ≤ α ρʳ through the first shell
    rho = max(
        (peaks[r - 1] / peaks[0]) ** (1 / (r - 1)) if peaks[r - 1] > 0 else 0.0
        for r in range(2, shells + 1)
    )
    if rho >= delta:
        return ConvergenceCertificate(BoundKind.NOT_CERTIFIED, d, delta, sums, rho=rho)

    scale = d / certificate.c_est
    if rho > 0:
        majorant = scale * peaks[0] / rho * _shell_counts(rho / delta)
    else:
        # nothing beyond the first shell, which holds 26 modes
        majorant = scale * peaks[0] / delta * 26
    if not isfinite(majorant) or sums[-1] > majorant:
        return ConvergenceCertificate(BoundKind.NOT_CERTIFIED, d, delta, sums, rho=rho)
    return ConvergenceCertificate(
        BoundKind.GEOMETRIC_MAJORANT, d, delta, sums, majorant=majorant, rho=rho
    )
