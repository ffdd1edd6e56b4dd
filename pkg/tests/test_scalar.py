from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from interpcat.scalar import (Poly, T, Ring, falling_factorial, parse_rational, scalar_to_text,
                              scalar_from_text, fmt_frac)

rats = st.fractions(max_denominator=20).filter(lambda q: abs(q) < 50)
polys = st.lists(rats, max_size=5).map(Poly)


def test_falling_factorial_values():
    assert falling_factorial(0, 0) == Poly((1,))
    assert falling_factorial(0, 2) == T * (T - 1)
    # integer values count injections
    for d in range(6):
        for k in range(4):
            n = 1
            for a in range(k):
                n *= d - a
            assert falling_factorial(0, k)(d) == n


def test_falling_factorial_errors():
    with pytest.raises(ValueError):
        falling_factorial(3, 1)
    with pytest.raises(ValueError):
        falling_factorial(-1, 1)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly()


@given(polys, rats)
def test_eval_is_homomorphism(a, x):
    b = a * a + T
    assert b(x) == a(x) ** 2 + x


@given(polys, rats)
def test_shift(a, c):
    assert a.shift(c)(F(3)) == a(F(3) + c)


def test_zero_poly():
    assert Poly().degree is None
    assert not Poly((0, 0))


@given(polys)
def test_text_roundtrip_poly(a):
    R = Ring()
    assert scalar_from_text(scalar_to_text(a), R) == a


@given(rats)
def test_text_roundtrip_rational(q):
    assert scalar_from_text(scalar_to_text(q), Ring(1)) == q
    assert parse_rational(fmt_frac(q)) == q


def test_parse_rational_rejects():
    for bad in ("1/0", "x", "1.5", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_ring_coerce_and_eval():
    R = Ring(F(7, 2))
    assert R.coerce(T * T) == F(49, 4)
    assert Ring().coerce(3) == Poly((3,))
    assert Ring().falling(0, 2)(5) == 20
    with pytest.raises(ValueError):
        R.evaluate(F(1), 3)
    assert Ring.parse("symbolic").is_symbolic
    assert Ring.parse("-1/3").t0 == F(-1, 3)
