"""Exact Gaussian rationals, the scalar field Q(i) used throughout the package.

Both components are gmpy2 ``mpq`` values, which are always kept in lowest
terms with a positive denominator, so equality is structural.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

__all__ = ["GaussianRational", "ScalarParseError", "as_scalar", "parse_scalar", "ZERO", "ONE", "I"]


class ScalarParseError(ValueError):
    """A scalar literal does not follow the text grammar."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"bad scalar {text!r} at position {position}: {reason}")


_MPQ = type(mpq(0))


def _q(x) -> "mpq":
    if isinstance(x, _MPQ):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return mpq(x)
    if isinstance(x, str):
        return mpq(x)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i). Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _q(re))
        object.__setattr__(self, "im", _q(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (Fraction(int(self.re.numerator), int(self.re.denominator)),
                                   Fraction(int(self.im.numerator), int(self.im.denominator))))

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, _MPQ, Fraction)):
            return GaussianRational(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(i)")
        if not self.im:
            return GaussianRational(1 / self.re)
        n = self.re * self.re + self.im * self.im
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self):
        """``|z|^2`` as an exact rational."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, _MPQ, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self):
        return (self.re, self.im)

    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(self.re)

    def to_fraction(self) -> Fraction:
        if self.im:
            raise ValueError(f"{self} is not real")
        return Fraction(int(self.re.numerator), int(self.re.denominator))

    # -- text -----------------------------------------------------------
    def __str__(self):
        if not self.im:
            return _fmt(self.re)
        if not self.re:
            return f"{_fmt(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{_fmt(self.re)}{sign}{_fmt(abs(self.im))}i"

    def __repr__(self):
        return f"GaussianRational('{self}')"


def _fmt(q) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

_RATIONAL = r"-?\d+(?:/\d+)?"
_GAUSSIAN = re.compile(
    rf"(?P<re>{_RATIONAL})(?:(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)i)?$|(?P<pure>{_RATIONAL})i$"
)


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``3/4``, ``-1/2+2/3i``, ``1i`` and friends.

    Grammar: ``rational := '-'? digits ('/' digits)?`` and
    ``gaussian := rational | rational ('+'|'-') rational 'i' | rational 'i'``.
    """
    if not isinstance(text, str):
        raise ScalarParseError(repr(text), 0, "scalars are written as strings")
    m = _GAUSSIAN.match(text)
    if m is None:
        pos = _first_bad_position(text)
        raise ScalarParseError(text, pos, "does not match the scalar grammar")
    try:
        if m.group("pure") is not None:
            return GaussianRational(0, _rational(m.group("pure")))
        re_part = _rational(m.group("re"))
        if m.group("im") is None:
            return GaussianRational(re_part)
        im = _rational(m.group("im"))
        return GaussianRational(re_part, im if m.group("sign") == "+" else -im)
    except ZeroDivisionError:
        raise ScalarParseError(text, text.find("/0") + 1, "zero denominator") from None


def _rational(tok: str):
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise ZeroDivisionError
    return mpq(int(num), int(den) if den else 1)


def _first_bad_position(text: str) -> int:
    # longest prefix that is still a prefix of some valid literal
    prefix = re.compile(r"-?\d*(?:/\d*)?(?:[+-]\d*(?:/\d*)?)?(?:(?<=\d)i)?")
    m = prefix.match(text)
    return m.end() if m else 0


def as_scalar(x) -> GaussianRational:
    """Coerce ints, rationals, strings and Gaussian rationals to GaussianRational."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, complex) or isinstance(x, float):
        raise TypeError("floating point values are not accepted; use exact scalars")
    return GaussianRational(x)
