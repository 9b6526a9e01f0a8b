from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from innerlie.scalars import (GaussRational, format_scalar, gauss_sqrt,
                              parse_scalar)

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))
gaussians = st.builds(GaussRational, rationals, rationals)


def test_basic_arithmetic():
    i = GaussRational(0, 1)
    assert i * i == GaussRational(-1)
    z = GaussRational(Fraction(1, 2), Fraction(-3, 4))
    assert z + z.conjugate() == GaussRational(1)
    assert (z * z.conjugate()).im == 0
    assert z / z == GaussRational(1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussRational(1) / GaussRational(0)


@given(gaussians, gaussians, gaussians)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@given(gaussians)
def test_conjugation_involution(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).im == 0


@given(gaussians)
def test_serialization_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_wire_forms():
    assert format_scalar(GaussRational(3)) == "3"
    assert format_scalar(GaussRational(Fraction(1, 2))) == "1/2"
    assert format_scalar(GaussRational(1, Fraction(-2, 3))) == {"re": "1", "im": "-2/3"}
    assert parse_scalar("7") == GaussRational(7)
    assert parse_scalar({"re": "1/2", "im": "3"}) == GaussRational(Fraction(1, 2), 3)


@pytest.mark.parametrize("z", [
    GaussRational(1), GaussRational(4), GaussRational(-1),
    GaussRational(0, 2), GaussRational(3, 4), GaussRational(Fraction(9, 4)),
])
def test_sqrt_exact(z):
    r = gauss_sqrt(z)
    assert r is not None
    assert r * r == z
    # canonical root: positive real part, ties broken upward
    assert r.re > 0 or (r.re == 0 and r.im >= 0)


def test_sqrt_nonexistent():
    assert gauss_sqrt(GaussRational(2)) is None
    assert gauss_sqrt(GaussRational(1, 1)) is None
