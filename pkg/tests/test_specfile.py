from fractions import Fraction

import pytest

from numerosities.errors import SpecFileError
from numerosities.specfile import load_spec, parse_spec, render_spec

HALVES = """\
# two halves
universe: a b c d
gen: a b
mu: a b = 1/2   # left half
mu: c d = 1/2
"""


def test_parse_halves():
    m = parse_spec(HALVES)
    assert m.space.labels == ("a", "b", "c", "d")
    assert sorted(map(sorted, m.atoms)) == [["a", "b"], ["c", "d"]]
    assert m.total == 1 and m.beta == 4
    assert m.mu({"a", "b"}) == Fraction(1, 2)


def test_render_round_trip():
    m = parse_spec(HALVES)
    again = parse_spec(render_spec(m))
    assert sorted(again.atom_masks) == sorted(m.atom_masks)
    assert all(again.mu(x) == m.mu(x) for x in m.members())


def test_load_spec(tmp_path):
    path = tmp_path / "halves.spec"
    path.write_text(HALVES)
    assert load_spec(path).total == 1
    with pytest.raises(SpecFileError):
        load_spec(tmp_path / "missing.spec")


@pytest.mark.parametrize(
    "text, line",
    [
        ("gen: a\n", 1),
        ("universe: a b\nuniverse: a\n", 2),
        ("universe:\n", 1),
        ("universe: a a\n", 1),
        ("universe: a b\ngen: a z\n", 2),
        ("universe: a b\nmu: a b = -1\n", 2),
        ("universe: a b\nmu: a b = 0.5\n", 2),
        ("universe: a b\nmu: a b\n", 2),
        ("universe: a b\nweight: a = 1\n", 2),
        ("universe: a b\njunk\n", 2),
        ("universe: a-b\n", 1),
        ("universe: a b\nmu: a b = 1\nmu: a b = 2\n", 3),
    ],
)
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(SpecFileError) as info:
        parse_spec(text)
    assert info.value.line == line


def test_missing_universe():
    with pytest.raises(SpecFileError):
        parse_spec("# nothing\n")
