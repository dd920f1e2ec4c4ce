from fractions import Fraction

import pytest
from hypothesis import given

from pencilforge.errors import DivisionByZero
from pencilforge.field import I, ONE, ZERO, GaussianRational, gr
from strategies import gaussian_scalars


def test_construction_from_strings_and_fractions():
    assert gr("1/4") == GaussianRational(Fraction(1, 4))
    assert gr(3, "-2/6") == GaussianRational(3, Fraction(-1, 3))
    assert gr(2) * I == GaussianRational(0, 2)


def test_i_squared_is_minus_one():
    assert I * I == -ONE


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO


def test_str_forms():
    assert str(gr("-3/2")) == "-3/2"
    assert str(ZERO) == "0"


@given(gaussian_scalars, gaussian_scalars, gaussian_scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(gaussian_scalars, gaussian_scalars)
def test_conjugation_is_multiplicative(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a * a.conj()).is_real
