"""test the serialize module."""

import json
from pathlib import Path

import numpy as np
import pytest

from tcohom.errors import ConfigError
from tcohom.lattice import Lattice, Mode
from tcohom.specform import (
    CoeffFunction,
    Frame,
    SpectralForm,
    dump_form,
    load_form,
    parse_form,
    random_form,
    serialize_form,
)

LATTICE = Lattice.default()

T4_DZ1_DZB1 = """{
  "bidegree": [1, 1],
  "entries": [
    {"sigma": [0, 0, 0], "I": [1], "J": [1], "terms": [{"re": "1", "im": "0", "k": 1, "m": 0}]}
  ]
}"""


def test_parse_form() -> None:
    """Test parsing t₄ dz₁∧dz̄₁."""
    form = parse_form(T4_DZ1_DZB1, LATTICE)
    want = SpectralForm.monomial(LATTICE, Frame.of((1,), (1,)), CoeffFunction.monomial(1, 1))
    assert form == want


def test_serialize_is_canonical() -> None:
    """Test that serialization is sorted and stable under a parse."""
    rng = np.random.default_rng(5)
    form = random_form(LATTICE, rng, (1, 1), entries=6)
    text = serialize_form(form)
    assert serialize_form(parse_form(text, LATTICE)) == text

    sigmas = [tuple(e["sigma"]) for e in json.loads(text)["entries"]]
    assert sigmas == sorted(sigmas)


def test_serialize_writes_decimal_strings() -> None:
    """Test that numbers are written as strings without negative zeros."""
    form = SpectralForm.monomial(LATTICE, Frame.of((1,)), complex(-0.0, 2.5), Mode(1, 0, 0))
    data = json.loads(serialize_form(form))
    assert data["entries"][0]["terms"] == [{"re": "0.0", "im": "2.5", "k": 0, "m": 0}]
    assert data["bidegree"] == [1, 0]


def test_mixed_forms_keep_their_degree() -> None:
    """Test that mixed forms serialize their degree."""
    form = SpectralForm.build(
        LATTICE,
        [
            (Mode.zero(), Frame.of((1,)), CoeffFunction.constant(1)),
            (Mode.zero(), Frame.of((), (1,)), CoeffFunction.constant(1)),
        ],
    )
    text = serialize_form(form)
    assert json.loads(text)["degree"] == 1
    assert parse_form(text, LATTICE) == form


@pytest.mark.parametrize(
    ("text", "path"),
    [
        ('{"bidegree": [1, 1], "entries": [{"sigma": [0, 0], "I": [1], "J": [1]}]}', "entries[0].sigma"),
        ('{"bidegree": [1, 1], "entries": [{"sigma": [0, 0, 0], "I": [3], "J": [1]}]}', "entries[0].I"),
        ('{"bidegree": [1, 1], "entries": [{"sigma": [0, 0, 0], "I": [1], "J": [1], "terms": [{"re": "x"}]}]}', "entries[0].terms[0].re"),
        ('{"bidegree": [1, 1], "entries": [{"sigma": [0, 0, 0], "I": [1], "J": [1], "terms": [{"re": "1", "k": -1}]}]}', "entries[0].terms[0].k"),
        ('{"bidegree": [1, 1], "entries": [{"sigma": [0, 0, 0], "I": [1], "J": [], "terms": [{"re": "1"}]}]}', "entries"),
        ('{"bidegree": [3, 1], "entries": []}', "bidegree"),
        ('{"bidegree": null, "entries": []}', "degree"),
    ],
)
def test_parse_form_errors(text: str, path: str) -> None:
    """Test that malformed form files name the offending field."""
    with pytest.raises(ConfigError) as info:
        parse_form(text, LATTICE)
    assert info.value.path == path


def test_dump_and_load(tmp_path: Path) -> None:
    """Test writing and reading a form file."""
    form = parse_form(T4_DZ1_DZB1, LATTICE)
    path = tmp_path / "form.json"
    dump_form(form, path)
    assert load_form(path, LATTICE) == form

    with pytest.raises(ConfigError):
        load_form(tmp_path / "missing.json", LATTICE)
