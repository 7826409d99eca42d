from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from griesskit.scalar import QuadScalar, format_scalar, parse_scalar, sqrt_d, to_scalar, is_squarefree

rats = st.builds(F, st.integers(-999, 999), st.integers(1, 50))
quads = st.builds(lambda a, b: QuadScalar(a, b, 5), rats, rats)


def test_sqrt_squares_to_d():
    r = sqrt_d(5)
    assert r * r == 5
    assert sqrt_d(1) == 1


def test_squarefree():
    assert is_squarefree(5) and is_squarefree(6)
    assert not is_squarefree(12)


@given(quads, quads, quads)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


@given(quads)
def test_inverse(x):
    if x:
        assert x * (1 / x) == 1
        assert x * x.conjugate() == x.norm()


@given(quads, quads)
def test_ordering_matches_sign_of_difference(x, y):
    assert (x < y) == bool((y - x)._sign() > 0)
    assert (x < y) + (x == y) + (x > y) == 1


@given(quads)
def test_format_parse_roundtrip(x):
    assert parse_scalar(format_scalar(x), 5) == x


@given(rats)
def test_rational_roundtrip(q):
    assert parse_scalar(format_scalar(q)) == q
    assert format_scalar(q).count("/") == 1


def test_floats_rejected():
    with pytest.raises(TypeError):
        to_scalar(0.5)


def test_field_mismatch():
    with pytest.raises(ValueError):
        to_scalar(QuadScalar(1, 1, 5), 2)
    with pytest.raises(ValueError):
        parse_scalar("1/1+1/1*sqrt(3)", 5)
    with pytest.raises(ValueError):
        parse_scalar("one half")


def test_rational_embeds():
    assert QuadScalar(F(1, 2), 0, 5) == F(1, 2)
    assert to_scalar("3/4", 5) == QuadScalar(F(3, 4), 0, 5)
