"""Gaussian rationals: complex scalars with exact rational real and imaginary parts.

Every primary computation in this package runs over these scalars; nothing
here ever rounds.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


class Scalar:
    """A complex number re + im*i with rational re, im."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    def __add__(self, other):
        other = as_scalar(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_scalar(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        other = as_scalar(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __truediv__(self, other):
        other = as_scalar(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def conjugate(self):
        return Scalar(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return render_scalar(self)

    def __repr__(self):
        return f"Scalar({self.re!r}, {self.im!r})"


ZERO = Scalar(0)
ONE = Scalar(1)
IUNIT = Scalar(0, 1)


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    raise TypeError(f"cannot coerce {x!r} to a scalar")


def render_scalar(s: Scalar) -> str:
    """Bit-exact rendering "p/q+r/si"; round-trips through parse_scalar."""
    if s.im == 0:
        return str(s.re)
    if s.re == 0:
        return f"{s.im}i"
    sign = "+" if s.im > 0 else "-"
    return f"{s.re}{sign}{abs(s.im)}i"


_PURE_RE = _re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*$")
_PURE_IM = _re.compile(r"^\s*([+-]?\d+(?:/\d+)?)i\s*$")
_BOTH = _re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)i\s*$")


def parse_scalar(text: str) -> Scalar:
    m = _PURE_RE.match(text)
    if m:
        return Scalar(Fraction(m.group(1)))
    m = _PURE_IM.match(text)
    if m:
        return Scalar(0, Fraction(m.group(1)))
    m = _BOTH.match(text)
    if m:
        im = Fraction(m.group(3))
        return Scalar(Fraction(m.group(1)), im if m.group(2) == "+" else -im)
    raise ValueError(f"malformed scalar literal: {text!r}")
