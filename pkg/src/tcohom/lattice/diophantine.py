"""theta / wild classification of lattices and small divisor diagnostics."""

from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from math import ceil, log
from typing import Final, final

import mpmath
import numpy as np
import numpy.typing as npt

from .lattice import Lattice, Mode, mode_multiplier_a
from .realexpr import Decimal, LiouvilleSeries, QuadraticIrrational, Rational, RealExpr

# spellchecker:words mpf workprec liouville rint


class Classification(StrEnum):
    """Outcome of classify_theta."""

    THETA = "Theta"
    WILD_EVIDENCE = "WildEvidence"
    NOT_TOROIDAL = "NotToroidal"
    INCONCLUSIVE = "Inconclusive"


class CertificateMethod(StrEnum):
    """How a DiophantineCertificate was obtained."""

    CONTINUED_FRACTION = "ContinuedFraction"
    BRUTE_FORCE_SCAN = "BruteForceScan"


@final
@dataclass(frozen=True)
class DiophantineCertificate:
    """A witness (C, δ) for dist(Z², (np, nq)) ≥ Cδⁿ, or the evidence against one."""

    classification: Classification
    c_est: float
    delta_est: float
    samples: tuple[tuple[int, float], ...]
    method: CertificateMethod
    precision: int
    diagnostic: str = ""

    def to_csv(self) -> str:
        """Render the samples as CSV with header n,dist."""
        rows = ["n,dist"]
        rows.extend(f"{n},{dist!r}" for n, dist in self.samples)
        return "\n".join(rows) + "\n"


@final
@dataclass(frozen=True)
class ClassifyOptions:
    """Options for classify_theta."""

    max_n: int = 10_000
    geometric_floor: float = 0.5
    kappa_max: float = 4.0
    """polynomial envelopes n^(-κ) tested by the heuristic, κ ≤ kappa_max"""

    tail_start: int = 16
    """samples below this n never count as evidence"""


_SMALL_N: Final = 10


def classify_theta(
    lattice: Lattice, opts: ClassifyOptions | None = None
) -> DiophantineCertificate:
    """Classify a lattice by the theta condition dist(Z², (np, nq)) ≥ Cδⁿ."""
    opts = opts or ClassifyOptions()
    prec = lattice.precision

    if not lattice.is_toroidal:
        return DiophantineCertificate(
            classification=Classification.NOT_TOROIDAL,
            c_est=1.0,
            delta_est=opts.geometric_floor,
            samples=(),
            method=CertificateMethod.CONTINUED_FRACTION,
            precision=prec,
            diagnostic="p and q are both rational",
        )

    # a bound for a single coordinate bounds the joint distance
    bounds = [
        _quadratic_bound(x) for x in (lattice.p, lattice.q) if isinstance(x, QuadraticIrrational)
    ]
    if bounds:
        return _certify(lattice, max(bounds), opts)

    return _scan(lattice, opts)


def _quadratic_bound(x: QuadraticIrrational) -> float:
    """Return c with ‖n x‖ ≥ c/n for all n ≥ 1."""
    pre, period = x.partial_quotients()
    quotients = (*pre[1:], *period)
    return 1.0 / (max(quotients, default=1) + 2)


def _certify(lattice: Lattice, c: float, opts: ClassifyOptions) -> DiophantineCertificate:
    delta = opts.geometric_floor
    # c/n ≥ C δⁿ for all n iff C ≤ c / max_n(n δⁿ)
    peak = max(n * delta**n for n in range(1, ceil(2 / -log(delta)) + 2))
    c_est = c / peak

    ns = set(range(1, _SMALL_N + 1))
    for x in (lattice.p, lattice.q):
        if isinstance(x, QuadraticIrrational):
            ns.update(_convergent_denominators(x, opts.max_n))

    samples = tuple((n, joint_distance(lattice, n)) for n in sorted(ns) if n <= opts.max_n)
    for n, dist in samples:
        if dist < c_est * delta**n:
            return DiophantineCertificate(
                classification=Classification.INCONCLUSIVE,
                c_est=c_est,
                delta_est=delta,
                samples=samples,
                method=CertificateMethod.CONTINUED_FRACTION,
                precision=lattice.precision,
                diagnostic=f"sample n={n} violates the continued fraction bound",
            )

    return DiophantineCertificate(
        classification=Classification.THETA,
        c_est=c_est,
        delta_est=delta,
        samples=samples,
        method=CertificateMethod.CONTINUED_FRACTION,
        precision=lattice.precision,
        diagnostic=f"partial quotients bounded, ‖nx‖ ≥ {c!r}/n",
    )


def _convergent_denominators(x: QuadraticIrrational, limit: int) -> list[int]:
    pre, period = x.partial_quotients()
    quotients = list(pre[1:])
    out: list[int] = []
    prev, cur = 0, 1
    index = 0
    while cur <= limit:
        out.append(cur)
        if index < len(quotients):
            a = quotients[index]
        elif period:
            a = period[(index - len(quotients)) % len(period)]
        else:
            break
        prev, cur = cur, a * cur + prev
        index += 1
    return out


def joint_distance(lattice: Lattice, n: int) -> float:
    """Return dist(Z², (np, nq)) computed with enough precision for n."""
    return float(_joint_distance_mp(lattice, n))


def _joint_distance_mp(lattice: Lattice, n: int) -> mpmath.mpf:
    prec = max(lattice.precision, n.bit_length() + lattice.precision)
    with mpmath.workprec(prec):
        parts = [_fractional_distance(x, n, prec) for x in (lattice.p, lattice.q)]
        return mpmath.sqrt(parts[0] ** 2 + parts[1] ** 2)


def _fractional_distance(x: RealExpr, n: int, prec: int) -> mpmath.mpf:
    """‖n x‖, exact when x has an exact fractional value."""
    exact: Fraction | None = None
    if isinstance(x, LiouvilleSeries | Decimal | Rational):
        exact = x.value
    if exact is not None:
        frac = (n * exact) % 1
        frac = min(frac, 1 - frac)
        return mpmath.mpf(frac.numerator) / frac.denominator
    value = n * x.evaluate(prec)
    return abs(value - mpmath.nint(value))


def scan_distances(lattice: Lattice, max_n: int) -> npt.NDArray[np.float64]:
    """Return dist(Z², (np, nq)) for n = 1, ..., max_n in double precision."""
    _, _, p, q = lattice.values()
    n = np.arange(1, max_n + 1, dtype=np.float64)
    dp = n * p
    dq = n * q
    return np.hypot(dp - np.rint(dp), dq - np.rint(dq))


def _scan(lattice: Lattice, opts: ClassifyOptions) -> DiophantineCertificate:
    floor = opts.geometric_floor
    dists = scan_distances(lattice, opts.max_n)
    ns = np.arange(1, opts.max_n + 1)

    diagnostic = ""
    resolution = max(
        (x.resolution for x in (lattice.p, lattice.q) if isinstance(x, Decimal)),
        default=None,
    )
    if resolution is not None:
        # the written digits only determine ‖np‖ while n·resolution is small against it
        trusted = ns * float(resolution) * 10 <= dists
        if not trusted.all():
            cut = int(np.argmin(trusted))
            dists = dists[:cut]
            ns = ns[:cut]
            diagnostic = f"decimal precision exhausted at n={cut + 1}"

    # natural logarithms of the distances: record minima of the scan plus structured samples
    logs: dict[int, float] = {}
    best = np.inf
    for n, dist in zip(ns.tolist(), dists.tolist(), strict=True):
        if 0 < dist < best:
            best = dist
            logs[n] = log(dist)
    for x in (lattice.p, lattice.q):
        if isinstance(x, LiouvilleSeries):
            for n in x.partial_denominators():
                dist = _joint_distance_mp(lattice, n)
                if dist > 0:
                    logs[n] = float(mpmath.log(dist))
    ordered = sorted(logs.items())
    samples = tuple((n, _exp(v)) for n, v in ordered)

    log_floor = log(floor)
    c_est = _exp(min((v - _times(n, log_floor) for n, v in ordered), default=0.0))

    tail = [(n, v) for n, v in ordered if n >= opts.tail_start]
    geometric = [n for n, v in tail if v < _times(n, log_floor)]
    polynomial = [n for n, v in tail if v + opts.kappa_max * log(n) < 0]
    if geometric or polynomial:
        witness = (geometric or polynomial)[0]
        reason = (
            "geometric floor" if geometric else f"every n^-{opts.kappa_max:g} envelope"
        )
        return DiophantineCertificate(
            classification=Classification.WILD_EVIDENCE,
            c_est=c_est,
            delta_est=floor,
            samples=samples,
            method=CertificateMethod.BRUTE_FORCE_SCAN,
            precision=lattice.precision,
            diagnostic=f"distance at n={witness} falls below the {reason} (evidence, not proof)",
        )

    return DiophantineCertificate(
        classification=Classification.INCONCLUSIVE,
        c_est=c_est,
        delta_est=floor,
        samples=samples,
        method=CertificateMethod.BRUTE_FORCE_SCAN,
        precision=lattice.precision,
        diagnostic=diagnostic or "no certificate available for inexact parameters",
    )


def _times(n: int, x: float) -> float:
    """n·x, saturating to ±inf for huge n."""
    try:
        return float(n) * x
    except OverflowError:
        return float("inf") if x > 0 else float("-inf")


def _exp(x: float) -> float:
    if x > _MAX_EXP:
        return float("inf")
    return float(np.exp(x))


_MAX_EXP: Final = 700.0


@final
@dataclass(frozen=True)
class DecayProfile:
    """Minimal small divisors per mode shell."""

    rows: tuple[tuple[int, float], ...]
    envelope_c: float = field(default=0.0)
    """fitted constant c of the polynomial envelope c/n"""

    def to_csv(self) -> str:
        """Render as CSV with header n,min_abs_A,fitted_envelope."""
        lines = ["n,min_abs_A,fitted_envelope"]
        lines.extend(f"{n},{value!r},{self.envelope_c / n!r}" for n, value in self.rows)
        return "\n".join(lines) + "\n"


def divisor_decay_profile(lattice: Lattice, n: int) -> DecayProfile:
    """Return min |A^σ| over σ ≠ 0 with max |σᵢ| ≤ k, for every shell k = 1..n."""
    if n <= 0:
        return DecayProfile(rows=())

    # A^σ is linear in σ
    units = np.array(
        [
            mode_multiplier_a(lattice, m)
            for m in (Mode(1, 0, 0), Mode(0, 1, 0), Mode(0, 0, 1))
        ]
    )
    axis = np.arange(-n, n + 1)
    s1, s2, s3 = np.meshgrid(axis, axis, axis, indexing="ij")
    values = np.abs(s1 * units[0] + s2 * units[1] + s3 * units[2])
    radius = np.maximum(np.maximum(np.abs(s1), np.abs(s2)), np.abs(s3))

    mins = np.full(n + 1, np.inf)
    np.minimum.at(mins, radius.ravel(), values.ravel())
    mins[0] = np.inf  # σ = 0
    running = np.minimum.accumulate(mins[1:])

    rows = tuple((k, float(v)) for k, v in zip(range(1, n + 1), running.tolist(), strict=True))
    envelope_c = min(k * v for k, v in rows)
    return DecayProfile(rows=rows, envelope_c=envelope_c)


class DecayKind(StrEnum):
    """Summary of a decay profile."""

    THETA_LIKE = "theta-like"
    WILD_LIKE = "wild-like"


def summarize_decay(
    profile: DecayProfile, certificate: DiophantineCertificate
) -> DecayKind:
    """Decide whether the small divisors look theta-like or wild-like.

    The shell profile is finite; a WildEvidence certificate extends it to the structured samples.
    """
    if certificate.classification is Classification.WILD_EVIDENCE:
        return DecayKind.WILD_LIKE
    if profile.rows and profile.envelope_c <= 0:
        return DecayKind.WILD_LIKE
    return DecayKind.THETA_LIKE
