"""reading and writing lattice files."""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from tcohom.errors import ConfigError

from .lattice import DEFAULT_PRECISION, InvalidLatticeError, Lattice
from .realexpr import (
    Decimal,
    LiouvilleSeries,
    QuadraticIrrational,
    Rational,
    RealExpr,
    RealExprError,
)

# spellchecker:words liouville


def load_lattice(path: Path, precision: int = DEFAULT_PRECISION) -> Lattice:
    """Read a lattice file."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as err:
        msg = f"cannot read lattice file: {err.strerror}"
        raise ConfigError(str(path), msg) from err
    return parse_lattice(text, precision)


def parse_lattice(text: str, precision: int = DEFAULT_PRECISION) -> Lattice:
    """Parse the JSON lattice format {"tau": {"re": .., "im": ..}, "p": .., "q": ..}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError("", err.msg, err.lineno) from err

    if not isinstance(data, dict):
        msg = "expected an object"
        raise ConfigError("", msg)
    tau = _field(data, "tau", "")
    if not isinstance(tau, dict):
        msg = "expected an object with re and im"
        raise ConfigError("tau", msg)

    try:
        return Lattice(
            tau_re=parse_real(_field(tau, "re", "tau"), "tau.re"),
            tau_im=parse_real(_field(tau, "im", "tau"), "tau.im"),
            p=parse_real(_field(data, "p", ""), "p"),
            q=parse_real(_field(data, "q", ""), "q"),
            precision=precision,
        )
    except InvalidLatticeError as err:
        raise ConfigError("tau.im", str(err)) from err


def dump_lattice(lattice: Lattice) -> str:
    """Serialize a lattice into the JSON lattice format."""
    data = {
        "tau": {"re": lattice.tau_re.to_json(), "im": lattice.tau_im.to_json()},
        "p": lattice.p.to_json(),
        "q": lattice.q.to_json(),
    }
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def parse_real(value: Any, path: str) -> RealExpr:
    """Parse a single real expression."""
    if not isinstance(value, dict) or len(value) == 0:
        msg = "expected one of rat, quad, dec, liouville"
        raise ConfigError(path, msg)

    try:
        if "rat" in value:
            num, den = _ints(value["rat"], 2, f"{path}.rat")
            return Rational(num, den)
        if "quad" in value:
            a_num, a_den, b_num, b_den, d = _ints(value["quad"], 5, f"{path}.quad")
            if a_den == 0 or b_den == 0:
                msg = "zero denominator"
                raise ConfigError(f"{path}.quad", msg)
            return QuadraticIrrational(Fraction(a_num, a_den), Fraction(b_num, b_den), d)
        if "dec" in value:
            digits = value["dec"]
            prec = value.get("prec", len(str(digits)))
            if not isinstance(digits, str) or not isinstance(prec, int):
                msg = "expected a digit string and an integer prec"
                raise ConfigError(f"{path}.dec", msg)
            return Decimal(digits, prec)
        if "liouville" in value:
            return _liouville(value["liouville"], f"{path}.liouville")
    except RealExprError as err:
        raise ConfigError(path, str(err)) from err

    msg = f"unknown real expression keys {sorted(value)}"
    raise ConfigError(path, msg)


def _liouville(value: Any, path: str) -> LiouvilleSeries:
    if not isinstance(value, dict):
        msg = "expected an object"
        raise ConfigError(path, msg)
    base = _field(value, "base", path)
    trunc = _field(value, "trunc", path)
    exponents = value.get("exponents", "factorial")
    if not isinstance(base, int) or not isinstance(trunc, int):
        msg = "base and trunc must be integers"
        raise ConfigError(path, msg)
    if exponents == "factorial":
        return LiouvilleSeries(base, trunc)
    return LiouvilleSeries(
        base, trunc, tuple(_ints(exponents, None, f"{path}.exponents"))
    )


def _field(data: dict[str, Any], name: str, path: str) -> Any:
    try:
        return data[name]
    except KeyError:
        msg = f"missing field {name!r}"
        raise ConfigError(path, msg) from None


def _ints(value: Any, count: int | None, path: str) -> list[int]:
    if (
        not isinstance(value, list)
        or (count is not None and len(value) != count)
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in value)
    ):
        want = f"{count} integers" if count is not None else "a list of integers"
        msg = f"expected {want}"
        raise ConfigError(path, msg)
    return value
