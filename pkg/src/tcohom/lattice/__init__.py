"""the lattice Λ_{τ,p,q}, its coordinates, mode multipliers and Diophantine classification."""

from .config import dump_lattice, load_lattice, parse_lattice, parse_real
from .diophantine import (
    CertificateMethod,
    Classification,
    ClassifyOptions,
    DecayKind,
    DecayProfile,
    DiophantineCertificate,
    classify_theta,
    divisor_decay_profile,
    joint_distance,
    scan_distances,
    summarize_decay,
)
from .lattice import (
    DEFAULT_PRECISION,
    InvalidLatticeError,
    Lattice,
    Mode,
    RealCoords,
    divisor_constant,
    from_real_coords,
    mode_multiplier_a,
    mode_multiplier_b,
    multiplier_a_exact,
    shell,
    to_real_coords,
)
from .realexpr import (
    Decimal,
    LiouvilleSeries,
    QuadraticIrrational,
    Rational,
    RationalityVerdict,
    RealExpr,
    RealExprError,
)

__all__ = [
    "DEFAULT_PRECISION",
    "CertificateMethod",
    "Classification",
    "ClassifyOptions",
    "DecayKind",
    "DecayProfile",
    "Decimal",
    "DiophantineCertificate",
    "InvalidLatticeError",
    "Lattice",
    "LiouvilleSeries",
    "Mode",
    "QuadraticIrrational",
    "Rational",
    "RationalityVerdict",
    "RealCoords",
    "RealExpr",
    "RealExprError",
    "classify_theta",
    "divisor_constant",
    "divisor_decay_profile",
    "dump_lattice",
    "from_real_coords",
    "joint_distance",
    "load_lattice",
    "mode_multiplier_a",
    "mode_multiplier_b",
    "multiplier_a_exact",
    "parse_lattice",
    "parse_real",
    "scan_distances",
    "shell",
    "summarize_decay",
    "to_real_coords",
]
