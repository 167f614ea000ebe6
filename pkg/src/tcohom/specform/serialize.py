"""reading and writing form files."""

import json
from pathlib import Path
from typing import Any

from tcohom.errors import ConfigError
from tcohom.lattice import Lattice, Mode

from .coeff import CoeffFunction, CoeffLimits, TruncationOverflowError
from .form import BidegreeMismatchError, SpectralForm
from .frame import Frame


def load_form(path: Path, lattice: Lattice, limits: CoeffLimits | None = None) -> SpectralForm:
    """Read a form file."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        msg = f"cannot read form file: {err.strerror}"
        raise ConfigError(str(path), msg) from err
    return parse_form(text, lattice, limits)


def dump_form(form: SpectralForm, path: Path) -> None:
    """Write a form file."""
    path.write_text(serialize_form(form), encoding="utf-8")


def serialize_form(form: SpectralForm) -> str:
    """Serialize into the canonical form file.

    Entries are sorted by mode, then frame, then (k, m); numbers are written as decimal strings.
    """
    entries = [
        {
            "sigma": list(mode.as_tuple()),
            "I": list(frame.holo),
            "J": list(frame.anti),
            "terms": [
                {"re": _decimal(c.real), "im": _decimal(c.imag), "k": k, "m": m}
                for (k, m), c in coeff.terms.items()
            ],
        }
        for mode, frame, coeff in form
    ]
    data: dict[str, Any] = {
        "bidegree": None if form.bidegree is None else list(form.bidegree),
        "entries": entries,
    }
    if form.bidegree is None:
        data["degree"] = form.degree
    return json.dumps(data, indent=2) + "\n"


def parse_form(
    text: str, lattice: Lattice, limits: CoeffLimits | None = None
) -> SpectralForm:
    """Parse a form file; zero terms are dropped and repeated entries summed."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError("", err.msg, err.lineno) from err
    if not isinstance(data, dict):
        msg = "expected an object"
        raise ConfigError("", msg)

    bidegree: tuple[int, int] | None = None
    degree: int | None = None
    raw = data.get("bidegree")
    if raw is None:
        degree = data.get("degree")
        if not _is_int(degree):
            msg = "mixed forms need an integer degree"
            raise ConfigError("degree", msg)
    else:
        bidegree = _int_pair(raw, "bidegree")

    entries = data.get("entries", [])
    if not isinstance(entries, list):
        msg = "expected a list"
        raise ConfigError("entries", msg)

    items = [_entry(entry, f"entries[{i}]") for i, entry in enumerate(entries)]
    try:
        return SpectralForm.build(
            lattice, items, bidegree=bidegree, degree=degree, limits=limits
        )
    except (BidegreeMismatchError, TruncationOverflowError) as err:
        raise ConfigError("entries", str(err)) from err


def _entry(entry: Any, path: str) -> tuple[Mode, Frame, CoeffFunction]:
    if not isinstance(entry, dict):
        msg = "expected an object"
        raise ConfigError(path, msg)

    sigma = entry.get("sigma")
    if not isinstance(sigma, list) or len(sigma) != 3 or not all(map(_is_int, sigma)):  # noqa: PLR2004
        msg = "expected three integers"
        raise ConfigError(f"{path}.sigma", msg)

    holo = _index_set(entry.get("I", []), f"{path}.I")
    anti = _index_set(entry.get("J", []), f"{path}.J")
    try:
        frame = Frame.of(holo, anti)
    except ValueError as err:
        raise ConfigError(path, str(err)) from err

    terms = entry.get("terms", [])
    if not isinstance(terms, list):
        msg = "expected a list"
        raise ConfigError(f"{path}.terms", msg)

    try:
        coeff = CoeffFunction.of(
            _term(term, f"{path}.terms[{j}]") for j, term in enumerate(terms)
        )
    except ValueError as err:
        if isinstance(err, ConfigError):
            raise
        raise ConfigError(f"{path}.terms", str(err)) from err
    return Mode(*sigma), frame, coeff


def _term(term: Any, path: str) -> tuple[tuple[int, int], complex]:
    if not isinstance(term, dict):
        msg = "expected an object"
        raise ConfigError(path, msg)
    k, m = term.get("k", 0), term.get("m", 0)
    if not _is_int(k) or k < 0:
        msg = "expected a nonnegative integer"
        raise ConfigError(f"{path}.k", msg)
    if not _is_int(m):
        msg = "expected an integer"
        raise ConfigError(f"{path}.m", msg)
    return (k, m), complex(
        _number(term.get("re", "0"), f"{path}.re"),
        _number(term.get("im", "0"), f"{path}.im"),
    )


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, str | int | float):
        msg = "expected a decimal string"
        raise ConfigError(path, msg)
    try:
        return float(value)
    except ValueError:
        msg = f"not a decimal number: {value!r}"
        raise ConfigError(path, msg) from None


def _index_set(value: Any, path: str) -> list[int]:
    if not isinstance(value, list) or not all(_is_int(v) and v in {1, 2} for v in value):
        msg = "expected a list of indices from {1, 2}"
        raise ConfigError(path, msg)
    return value


def _int_pair(value: Any, path: str) -> tuple[int, int]:
    if (
        not isinstance(value, list)
        or len(value) != 2  # noqa: PLR2004
        or not all(_is_int(v) and 0 <= v <= 2 for v in value)  # noqa: PLR2004
    ):
        msg = "expected two integers between 0 and 2"
        raise ConfigError(path, msg)
    return value[0], value[1]


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _decimal(x: float) -> str:
    # adding 0.0 turns -0.0 into 0.0
    return repr(x + 0.0)
