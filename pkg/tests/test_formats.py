import pytest

from lexgrowth import ParseError, RingSpec
from lexgrowth.formats import format_set_line, parse_monomial, parse_set, read_set_file, write_set_file


def test_parse_monomial():
    assert parse_monomial("3 1 0") == (3, 1, 0)
    with pytest.raises(ParseError):
        parse_monomial("3 a 0")


def test_inline_and_file_forms_agree(tmp_path):
    ring = RingSpec(3)
    inline = parse_set("3 1 0; 3 0 1; 1 3 0; 0 3 1", ring)
    path = tmp_path / "a.txt"
    path.write_text("# the set A\n3 1 0\n\n3 0 1   # comment\n1 3 0\n0 3 1\n")
    assert read_set_file(path, ring) == inline
    out = tmp_path / "b.txt"
    write_set_file(out, inline)
    assert read_set_file(out, ring) == inline


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as exc:
        parse_set("1 0 0\n# ok\n1 x 0\n", RingSpec(3))
    assert exc.value.line == 3
    with pytest.raises(ParseError):
        parse_set("1 0", RingSpec(3))
    with pytest.raises(ParseError):
        parse_set("1 0 0; 1 0 0", RingSpec(3))


def test_set_line_is_lex_descending():
    assert format_set_line([(0, 1, 1), (1, 1, 0), (1, 0, 1)]) == "1 1 0; 1 0 1; 0 1 1"
