"""Exact Gaussian rationals a + bi with unbounded rational parts."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import DivisionByZero

Scalar = Union["GaussianRational", int, Fraction]


class GaussianRational:
    """Immutable complex number with ``Fraction`` real and imaginary parts."""

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: Rational | int | str = 0, im: Rational | int | str = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> GaussianRational:
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    # arithmetic

    def __add__(self, other: Scalar) -> GaussianRational:
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> GaussianRational:
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalar) -> GaussianRational:
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: Scalar) -> GaussianRational:
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational._raw(a * c, _ZERO_F)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> GaussianRational:
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: Scalar) -> GaussianRational:
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __neg__(self) -> GaussianRational:
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self) -> GaussianRational:
        return self

    def __pow__(self, n: int) -> GaussianRational:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inv()
        result = ONE
        for _ in range(abs(n)):
            result = result * base
        return result

    def inv(self) -> GaussianRational:
        if not self:
            raise DivisionByZero("inverse of zero")
        if not self.im:
            return GaussianRational._raw(1 / self.re, _ZERO_F)
        norm = self.re * self.re + self.im * self.im
        return GaussianRational._raw(self.re / norm, -self.im / norm)

    def conj(self) -> GaussianRational:
        if not self.im:
            return self
        return GaussianRational._raw(self.re, -self.im)

    # predicates and comparison

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}*i"
        if not self.re:
            return imag
        if imag.startswith("-"):
            return f"{self.re} - {imag[1:]}"
        return f"{self.re} + {imag}"


_ZERO_F = Fraction(0)

ZERO = GaussianRational._raw(Fraction(0), Fraction(0))
ONE = GaussianRational._raw(Fraction(1), Fraction(0))
I = GaussianRational._raw(Fraction(0), Fraction(1))


def coerce(value) -> GaussianRational:
    """Convert ints and Fractions to GaussianRational; other types give NotImplemented."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return GaussianRational._raw(Fraction(value), _ZERO_F)
    return NotImplemented


def gr(value: Scalar | str, im: Scalar | str = 0) -> GaussianRational:
    """Build a GaussianRational from ints, Fractions or strings such as ``"1/4"``."""
    if isinstance(value, GaussianRational):
        if im:
            return value + GaussianRational(0, 1) * gr(im)
        return value
    if isinstance(im, GaussianRational):
        return GaussianRational(value) + I * im
    return GaussianRational(value, im)
