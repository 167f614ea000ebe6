"""forms on X as finite Fourier-mode sums."""

from .coeff import CoeffFunction, CoeffLimits, TermKey, TruncationOverflowError
from .form import (
    Bidegree,
    BidegreeMismatchError,
    LatticeMismatchError,
    SpectralForm,
    combine_all,
)
from .frame import Frame, Leg, frames, frames_of_degree
from .membership import (
    FunctionSheaf,
    SheafMembership,
    coefficient_in,
    f_sheaf_for,
    fbar_sheaf_for,
    g_sheaf_for,
    sheaf_membership,
)
from .sampling import random_coeff, random_f_form, random_form, random_g_form, random_mode
from .serialize import dump_form, load_form, parse_form, serialize_form

__all__ = [
    "Bidegree",
    "BidegreeMismatchError",
    "CoeffFunction",
    "CoeffLimits",
    "Frame",
    "FunctionSheaf",
    "LatticeMismatchError",
    "Leg",
    "SheafMembership",
    "SpectralForm",
    "TermKey",
    "TruncationOverflowError",
    "coefficient_in",
    "combine_all",
    "dump_form",
    "f_sheaf_for",
    "fbar_sheaf_for",
    "frames",
    "frames_of_degree",
    "g_sheaf_for",
    "load_form",
    "parse_form",
    "random_coeff",
    "random_f_form",
    "random_form",
    "random_g_form",
    "random_mode",
    "serialize_form",
    "sheaf_membership",
]
