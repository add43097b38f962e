from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from freecurve.arith import (PRIME_HIGH, PRIME_LOW, BadPrime, FpElem, PrimeSource, as_rational, is_prime,
                             normalize, reduce_mod_p)

P = 2147483647  # 2^31 - 1


def test_normalize_reduces_and_fixes_sign():
    q = normalize(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)
    assert normalize(0, 7) == Fraction(0, 1)
    with pytest.raises(ZeroDivisionError):
        normalize(1, 0)


def test_as_rational_rejects_floats():
    assert as_rational(3) == Fraction(3)
    with pytest.raises(TypeError):
        as_rational(0.5)


@given(st.integers(), st.integers(min_value=1, max_value=10**12))
def test_reduce_mod_p_is_a_ring_map(a, b):
    q = Fraction(a, b)
    r = reduce_mod_p(q, P)
    assert 0 <= r < P
    assert r * (b % P) % P == a % P


def test_reduce_mod_p_bad_prime():
    with pytest.raises(BadPrime) as exc:
        reduce_mod_p(Fraction(1, 7 * P), P)
    assert exc.value.p == P


def test_is_prime_small_table():
    small = [n for n in range(200) if is_prime(n)]
    assert small[:10] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(small) == 46
    assert is_prime(P) and not is_prime(P + 2)


def test_prime_source_is_seeded_and_in_range():
    a = [PrimeSource(5).fresh_prime() for _ in range(3)]
    b = [PrimeSource(5).fresh_prime() for _ in range(3)]
    assert a == b
    src = PrimeSource(5)
    seen = []
    for _ in range(5):
        p = src.fresh_prime(seen)
        assert PRIME_LOW < p < PRIME_HIGH and is_prime(p) and p not in seen
        seen.append(p)
    assert PrimeSource(6).fresh_prime() != PrimeSource(5).fresh_prime()


@given(st.integers(min_value=1, max_value=P - 1), st.integers(min_value=0, max_value=P - 1))
def test_fp_field_laws(a, b):
    x, y = FpElem(a, P), FpElem(b, P)
    assert (x * x.inverse()).value == 1
    assert (x + y - y) == x
    assert (y / x * x) == y
    assert int(-x + x) == 0


def test_fp_mixed_moduli_and_zero_inverse():
    with pytest.raises(ValueError):
        FpElem(1, 7) + FpElem(1, 11)
    with pytest.raises(ZeroDivisionError):
        FpElem(0, 7).inverse()
    assert FpElem.from_rational(Fraction(1, 2), 7).value == 4
