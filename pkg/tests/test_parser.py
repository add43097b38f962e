from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freecurve.parser import MAX_DEGREE, ParseDiagnostic, parse_expression, tokenize
from freecurve.poly import TriPoly, X, Y, Z
from strategies import tripolys


@pytest.mark.parametrize("text, expected", [
    ("xyz", X * Y * Z),
    ("2x^2y", (X**2 * Y).scale(2)),
    ("x(y+z)", X * Y + X * Z),
    ("(y*z+x^2)^2*y - x^5", (Y * Z + X**2) ** 2 * Y - X**5),
    ("-x + +y", Y - X),
    ("1/2 x", X.scale(Fraction(1, 2))),
    ("3/6", TriPoly.const(Fraction(1, 2))),
    ("(x+y)^0", TriPoly.const(1)),
    ("  x ^ 2  ", X**2),
])
def test_accepts(text, expected):
    assert parse_expression(text) == expected


@pytest.mark.parametrize("text, message, position", [
    ("x^-2", "negative exponent", 2),
    ("x/y", "division by a non-literal", 1),
    ("1/x", "division by a non-literal", 2),
    ("1/0", "zero denominator", 2),
    ("(x+y", "unbalanced parenthesis", 4),
    ("x+)", "expected a number, variable or '('", 2),
    ("x y w", "unexpected character 'w'", 4),
    ("x^2^3", "unexpected '^'", 3),
    ("x^y", "exponent must be a non-negative integer", 2),
    ("", "expected a number, variable or '('", 0),
])
def test_diagnostics(text, message, position):
    with pytest.raises(ParseDiagnostic) as exc:
        parse_expression(text)
    assert exc.value.message == message
    assert exc.value.position == position


def test_positions_are_byte_offsets():
    text = "x\u00a0+ #"  # the no-break space is whitespace but takes two bytes
    with pytest.raises(ParseDiagnostic) as exc:
        parse_expression(text)
    assert exc.value.position == 5 != text.index("#")
    assert [t.position for t in tokenize("x\u00a0y")] == [0, 3, 4]
    with pytest.raises(ParseDiagnostic) as exc:
        parse_expression("x*\u00e9")
    assert exc.value.position == 2 and "\u00e9" in exc.value.message


def test_homogeneity_flag_and_degree_cap():
    with pytest.raises(ParseDiagnostic, match="not homogeneous"):
        parse_expression("x^2+y", require_homogeneous=True)
    assert parse_expression("x^2+y*z", require_homogeneous=True) == X**2 + Y * Z
    with pytest.raises(ParseDiagnostic, match="degree"):
        parse_expression(f"x^{MAX_DEGREE + 1}")
    with pytest.raises(ParseDiagnostic, match="degree"):
        parse_expression(f"x^{MAX_DEGREE} * y")


@given(tripolys())
def test_render_round_trip(p):
    assert parse_expression(p.render()) == p


@settings(max_examples=400)
@given(st.text(alphabet="xyz0123456789+-*/^() é", max_size=14))
def test_parser_is_total(text):
    """Every input either parses or fails with a positioned diagnostic."""
    try:
        out = parse_expression(text)
    except ParseDiagnostic as exc:
        assert 0 <= exc.position <= len(text.encode())
        assert exc.message
    else:
        assert isinstance(out, TriPoly)
