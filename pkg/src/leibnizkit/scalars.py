"""Exact scalars: Gaussian rationals a + b*i built on reduced Fractions.

Every quantity in the package (structure constants, matrix entries,
certificate maps) is a Scalar, so rank and dimension counts are exact.
The text grammar accepted by parse_scalar is the interchange format used
by all file formats and CLI output:

    [-] frac [ (+|-) frac "i" ]   |   [-] frac "i"

with frac = int or int/posint, e.g. "3/2", "0", "-1/3+2i", "2i".
"""

from __future__ import annotations

import re
from fractions import Fraction


class ScalarParseError(ValueError):
    """Text did not match the scalar grammar."""


def _mk(re_part, im_part):
    # internal fast constructor: arguments must already be Fractions
    s = Scalar.__new__(Scalar)
    s.re = re_part
    s.im = im_part
    return s


def _frac(value):
    return value if isinstance(value, Fraction) else Fraction(value)


class Scalar:
    """An element of Q(i), stored as two reduced Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        return _mk(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_scalar(other)
        return _mk(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other).__sub__(self)

    def __neg__(self):
        return _mk(-self.re, -self.im)

    def __mul__(self, other):
        other = as_scalar(other)
        if self.im or other.im:
            return _mk(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return _mk(self.re * other.re, _F0)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_scalar(other)
        if not other:
            raise ZeroDivisionError("scalar division by zero")
        if not other.im:
            return _mk(self.re / other.re, self.im / other.re)
        n = other.re * other.re + other.im * other.im
        return _mk(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return as_scalar(other).__truediv__(self)

    def inverse(self):
        return ONE / self

    # -- structure -----------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.re == other and not self.im
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return "Scalar(%s)" % self.render()

    def __str__(self):
        return self.render()

    def render(self):
        """Canonical text form; parse_scalar(render()) round-trips."""
        if not self.im:
            return _render_frac(self.re)
        if not self.re:
            return _render_frac(self.im) + "i"
        sign = "+" if self.im > 0 else "-"
        return _render_frac(self.re) + sign + _render_frac(abs(self.im)) + "i"


_F0 = Fraction(0)

ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def as_scalar(value):
    """Coerce int, Fraction or Scalar to Scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)):
        return Scalar(value)
    raise TypeError("cannot interpret %r as a scalar" % (value,))


def _render_frac(q):
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


_FRAC_RX = r"\d+(?:/\d+)?"
_SCALAR_RX = re.compile(r"^(-)?(%s)(?:(i)|([+-])(%s)i)?$" % (_FRAC_RX, _FRAC_RX))


def _parse_frac(token):
    if "/" in token:
        num, den = token.split("/", 1)
        if int(den) == 0:
            raise ScalarParseError("zero denominator in '%s'" % token)
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def parse_scalar(text):
    """Parse the scalar grammar; raises ScalarParseError naming the token."""
    if not isinstance(text, str):
        raise ScalarParseError("expected a scalar string, got %r" % (text,))
    m = _SCALAR_RX.match(text.strip())
    if m is None:
        raise ScalarParseError("malformed scalar '%s'" % text)
    sign, first, pure_i, op, second = m.groups()
    a = _parse_frac(first)
    if sign:
        a = -a
    if pure_i:
        return Scalar(0, a)
    if op is None:
        return Scalar(a)
    b = _parse_frac(second)
    if op == "-":
        b = -b
    return Scalar(a, b)
