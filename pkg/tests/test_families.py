import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freecurve.families import (CATALOGUE, FIB_EXPECTED, catalogue_json, fibonacci, gen_line_arrangement,
                                gen_prop1, gen_prop2i, gen_prop2ii, gen_prop2iii, gen_prop3, gen_prop4i,
                                gen_prop4ii, gen_stfam, gen_thm2ii, gen_valles_pencil, generate, prop2i_chain,
                                syzygy_template_rkeq2i, syzygy_templates_thm2ii)
from freecurve.milnor import CurveInput, annihilates
from freecurve.parser import parse_expression
from freecurve.poly import X, Y, Z
from freecurve.verify import load_golden

GOLDEN = Path(__file__).parent / "golden"


def test_reference_two_cusp_curves():
    reference = json.loads((GOLDEN / "two_cusp_reference.json").read_text())
    assert reference == load_golden()["two_cusp_reference"]
    chain = prop2i_chain(10)
    for d in range(4, 11):
        assert chain[d - 3][0] == parse_expression(reference[str(d)]), d
    assert chain[-1][0].coefficient((10, 0, 0)) == 429


def test_two_cusp_recursion_coefficients():
    # a_d is the x^d coefficient of f_d: 1, 1, 2, 5, 14, 42, ...
    assert [a for _, a in prop2i_chain(9)] == [1, 1, 2, 5, 14, 42, 132]


@pytest.mark.parametrize("d", range(5, 16))
def test_two_cusp_relation(d):
    c = CurveInput(gen_prop2i(d).f)
    assert annihilates(c, syzygy_template_rkeq2i(d))
    assert not annihilates(c, syzygy_template_rkeq2i(d, plus_sign=True))


def test_two_cusp_relation_at_seven():
    A, B, C = syzygy_template_rkeq2i(7)
    assert A == (X**2).scale(5) - (X * Y).scale(16)
    assert C.coefficient((2, 0, 0)) == 490  # 2d(2d-7) a_6 with a_6 = 5


@pytest.mark.parametrize("k", range(2, 7))
def test_theorem_relations(k):
    c = CurveInput(gen_thm2ii(k).f)
    r1, r2 = syzygy_templates_thm2ii(k)
    assert annihilates(c, r1) and annihilates(c, r2)
    assert all(part.homogeneous_degree in (k, -1) for part in r1 + r2)


def test_theorem_relation_at_two():
    _, r2 = syzygy_templates_thm2ii(2)
    assert r2 == (parse_expression("0"), parse_expression("-2y^2"), parse_expression("x^2+3yz"))


def test_fibonacci_degrees():
    assert [fibonacci(n) for n in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    for k in range(3):
        spec = gen_prop4ii(k)
        assert spec.d == fibonacci(2 * k + 5) == FIB_EXPECTED[k][0]
        assert spec.f.is_homogeneous()


def test_tricuspidal_construction():
    for d in range(5, 11):
        for b in range(1, d - 1):
            a = d - 2 - b
            if a < b:
                break
            spec = gen_prop3(a, b)
            assert spec.d == d and spec.f.homogeneous_degree == d
    quintic = gen_prop3(2, 1)
    assert any(isinstance(v, Fraction) for _, v in quintic.f.items())
    assert gen_prop3(3, 1).f != gen_prop3(2, 2).f
    with pytest.raises(ValueError):
        gen_prop3(1, 2)


def test_arrangement_metadata():
    for which, tau in (("d7", 27), ("d8", 37), ("d9", 49)):
        spec = gen_line_arrangement(which)
        assert spec.singularities.mu == tau == spec.expected.tau


def test_declared_expectations():
    assert gen_stfam(5).expected.tau == 12
    assert gen_stfam(8, 1, 1, 1).expected.tau == 39
    assert gen_thm2ii(4).expected.tau == 48 and gen_thm2ii(4).d == 9
    assert gen_prop4i(3).expected.tau == 19
    assert gen_prop4i(2).expected.free is False
    assert gen_prop2i(6).singularities.mu == 20
    assert gen_valles_pencil().d == 15
    assert gen_prop1(1).f == (Y * Z + X**2) ** 2 - X * Y**3
    assert gen_prop2iii(0, 2).d == 6 and gen_prop2iii(1, 1).d == 6 and gen_prop2iii(1, 2).d == 8


def test_generator_guards():
    with pytest.raises(ValueError):
        gen_stfam(7, a=0)
    with pytest.raises(ValueError):
        gen_stfam(4)
    with pytest.raises(ValueError):
        gen_prop1(1, {2: 0})
    with pytest.raises(ValueError):
        gen_prop2iii(0, 1)
    with pytest.raises(KeyError):
        generate("nope")
    with pytest.raises(ValueError):
        generate("stfam", k=3)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 4), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_random_coefficients_stay_homogeneous(k, vals):
    coeffs = {i: v for i, v in zip(range(2, k + 1), vals)}
    assert gen_prop2ii(k, coeffs).f.homogeneous_degree == 2 * k + 1
    if vals[-1]:
        assert gen_prop1(k, {k + 1: vals[-1]}).f.homogeneous_degree == 2 * k + 2


def test_catalogue():
    cat = catalogue_json()
    assert len(cat) >= 10 and {e["id"] for e in cat} == set(CATALOGUE)
    assert all(e["provenance"] for e in cat)
