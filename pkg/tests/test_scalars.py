from fractions import Fraction

import pytest
from hypothesis import given

from liecert.scalars import GaussianRational, ScalarParseError, as_scalar, parse_scalar

from conftest import gaussians

I = GaussianRational(0, 1)


@pytest.mark.parametrize("text,value", [
    ("3/4", GaussianRational(Fraction(3, 4))),
    ("-1/2+2/3i", GaussianRational(Fraction(-1, 2), Fraction(2, 3))),
    ("1i", I),
    ("-5", GaussianRational(-5)),
    ("0-1i", -I),
])
def test_grammar_accepts(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text,pos", [("1//2", 2), ("1.5", 1), ("", 0), ("i", 0), ("2/0", 2)])
def test_grammar_rejects_with_position(text, pos):
    with pytest.raises(ScalarParseError) as info:
        parse_scalar(text)
    assert info.value.position == pos


def test_floats_refused():
    with pytest.raises(TypeError):
        as_scalar(0.5)


@given(gaussians())
def test_str_round_trip(x):
    assert parse_scalar(str(x)) == x


@given(gaussians(), gaussians(), gaussians())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
        assert b * b.inverse() == 1


@given(gaussians())
def test_norm_is_product_with_conjugate(a):
    assert a * a.conjugate() == a.norm()
