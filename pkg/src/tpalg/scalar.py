"""Exact Gaussian rationals a + b*i with a, b in Q.

All structure constants, map entries and family parameters are
:class:`Scalar` values.  The text form is::

    RAT    := ['-'] digits ['/' digits]
    SCALAR := RAT | RAT ('+'|'-') RAT 'i' | ['-'] RAT 'i'

so ``3``, ``-1/2``, ``2/3+1/5i`` and ``-1i`` are valid, ``-i`` is not.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import FormatError

__all__ = ["Scalar", "ZERO", "ONE", "I", "as_scalar", "parse_scalar", "format_scalar"]

_RAT = r"-?\d+(?:/\d+)?"
_FULL = re.compile(rf"^({_RAT})([+-])(\d+(?:/\d+)?)i$")
_IMAG = re.compile(rf"^({_RAT})i$")
_REAL = re.compile(rf"^({_RAT})$")


class Scalar:
    """An element of Q(i).

    Instances are immutable by convention: ``re`` and ``im`` are
    :class:`fractions.Fraction` (always in lowest terms with positive
    denominator) and are never reassigned after construction.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("cannot combine a Scalar real part with an imaginary part")
            self.re, self.im = re.re, re.im
            return
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floats are not exact; pass ints, Fractions or strings")
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> Scalar:
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    # -- predicates -----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> Scalar:
        return Scalar._raw(self.re, -self.im)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(o.re - self.re, o.im - self.im)

    def __neg__(self) -> Scalar:
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self) -> Scalar:
        return self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return Scalar._raw(a * c, b)
        return Scalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero Scalar")
            return Scalar._raw(1 / a, b)
        norm = a * a + b * b
        return Scalar._raw(a / norm, -b / norm)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o.im:
            if not o.re:
                raise ZeroDivisionError("division by zero Scalar")
            return Scalar._raw(self.re / o.re, self.im / o.re)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> Scalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text -----------------------------------------------------------
    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar('{format_scalar(self)}')"


def _coerce(x) -> Scalar | None:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Scalar._raw(Fraction(x), Fraction(0))
    return None


def as_scalar(x) -> Scalar:
    """Convert an int, Fraction, Scalar or SCALAR string to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot interpret {x!r} as an exact scalar")
    return s


def _rat(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise FormatError(f"zero denominator in scalar {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text: str) -> Scalar:
    t = text.strip()
    m = _REAL.match(t)
    if m:
        return Scalar._raw(_rat(m.group(1)), Fraction(0))
    m = _FULL.match(t)
    if m:
        im = _rat(m.group(3))
        if m.group(2) == "-":
            im = -im
        return Scalar._raw(_rat(m.group(1)), im)
    m = _IMAG.match(t)
    if m:
        return Scalar._raw(Fraction(0), _rat(m.group(1)))
    raise FormatError(f"not a valid scalar: {text!r}")


def format_scalar(s: Scalar) -> str:
    if not s.im:
        return str(s.re)
    if not s.re:
        return f"{s.im}i"
    sign = "-" if s.im < 0 else "+"
    return f"{s.re}{sign}{abs(s.im)}i"


ZERO = Scalar._raw(Fraction(0), Fraction(0))
ONE = Scalar._raw(Fraction(1), Fraction(0))
I = Scalar._raw(Fraction(0), Fraction(1))
