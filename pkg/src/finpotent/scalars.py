"""Exact scalars over Q and Q(i).

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals
``a + b i`` with ``a, b`` in Q are :class:`Gaussian`.  Both expose
``conjugate()``, so code written against the field only ever calls
``x.conjugate()`` and never needs to know which field it is working in.

Q embeds in Q(i), so arithmetic between a ``Gaussian`` and a rational
promotes to ``Gaussian``.  Mixing *matrices* of different fields is refused
at the matrix level (see :class:`finpotent.matrix.FieldMismatch`).
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Union

REAL = "real"
COMPLEX = "complex"

FIELD_NAMES = {REAL: "rational", COMPLEX: "gaussian"}


class FieldMismatch(TypeError):
    """Operands live in different ground fields."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


class Gaussian:
    """Gaussian rational ``re + im*i`` with exact Fraction parts.

    >>> Gaussian(Fraction(1, 2), Fraction(1, 2)) * Gaussian(Fraction(1, 2), Fraction(-1, 2))
    Gaussian(1/2, 0)
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x) -> "Gaussian":
        if isinstance(x, Gaussian):
            return x
        return cls(x, 0)

    def conjugate(self) -> "Gaussian":
        return Gaussian(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, numbers.Rational):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, Gaussian):
            return Gaussian(self.re + other.re, self.im + other.im)
        if isinstance(other, numbers.Rational):
            return Gaussian(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Gaussian):
            return Gaussian(self.re - other.re, self.im - other.im)
        if isinstance(other, numbers.Rational):
            return Gaussian(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Rational):
            return Gaussian(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Gaussian):
            a, b, c, d = self.re, self.im, other.re, other.im
            return Gaussian(a * c - b * d, a * d + b * c)
        if isinstance(other, numbers.Rational):
            return Gaussian(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Gaussian(self.re / other, self.im / other)
        if isinstance(other, Gaussian):
            n = other.abs2()
            if n == 0:
                raise ZeroDivisionError("division by zero")
            return self * other.conjugate() * Fraction(1) / n
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, numbers.Rational):
            return Gaussian(other, 0) / self
        return NotImplemented


Scalar = Union[Fraction, Gaussian]

I = Gaussian(0, 1)


def field_of(x) -> str:
    return COMPLEX if isinstance(x, Gaussian) else REAL


def to_field(x, field: str) -> Scalar:
    """Coerce ``x`` into ``field``.  Refuses to drop a nonzero imaginary part."""
    if field == COMPLEX:
        return Gaussian.coerce(x)
    if isinstance(x, Gaussian):
        if x.im:
            raise FieldMismatch(f"{x} is not real")
        return x.re
    return _frac(x)


def zero(field: str) -> Scalar:
    return Gaussian(0, 0) if field == COMPLEX else Fraction(0)


def one(field: str) -> Scalar:
    return Gaussian(1, 0) if field == COMPLEX else Fraction(1)


def abs2(x) -> Fraction:
    """``x * conj(x)``, always a nonnegative rational."""
    if isinstance(x, Gaussian):
        return x.abs2()
    return x * x


def _binary(x, y):
    fx, fy = field_of(x), field_of(y)
    if fx != fy:
        raise FieldMismatch(f"cannot combine {fx} and {fy} scalars")


def add(x, y):
    _binary(x, y)
    return x + y


def sub(x, y):
    _binary(x, y)
    return x - y


def mul(x, y):
    _binary(x, y)
    return x * y


def div(x, y):
    _binary(x, y)
    return x / y


def conj(x):
    return x.conjugate()


def is_zero(x) -> bool:
    return not x


def parse_scalar(text, field: str = REAL) -> Scalar:
    """Parse ``"p/q"``, an int, or ``{"re": "p/q", "im": "r/s"}``.

    Raises ``ValueError`` on malformed text and :class:`FieldMismatch` when a
    complex literal is given for the real field.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a scalar: {text!r}")
    if isinstance(text, dict):
        extra = set(text) - {"re", "im"}
        if extra:
            raise ValueError(f"unexpected keys in scalar: {sorted(extra)}")
        re = parse_scalar(text.get("re", 0), REAL)
        im = parse_scalar(text.get("im", 0), REAL)
        return to_field(Gaussian(re, im), field)
    if isinstance(text, int):
        return to_field(Fraction(text), field)
    if isinstance(text, str):
        s = text.strip()
        try:
            # Fraction accepts decimals like "0.5"; keep the grammar to p/q.
            if any(ch in s for ch in ".eE"):
                raise ValueError
            value = Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"malformed rational {text!r}, expected 'p/q'") from None
        return to_field(value, field)
    raise ValueError(f"not a scalar: {text!r}")


def format_scalar(x):
    """Inverse of :func:`parse_scalar` (JSON-ready)."""
    if isinstance(x, Gaussian):
        return {"re": str(x.re), "im": str(x.im)}
    return str(x)
