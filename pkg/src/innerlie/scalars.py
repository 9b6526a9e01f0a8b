"""Exact scalars: rationals and Gaussian rationals.

Rationals are ``fractions.Fraction`` (already canonical: reduced, positive
denominator).  ``GaussRational`` is the field Q(i) built on top, which is
the scalar field for every computation in the library; a handful of
constructions need sqrt(-1), everything else stays rational.

Wire format: a rational serializes as the string "p/q" ("p" when q == 1);
a Gaussian rational with nonzero imaginary part serializes as
{"re": "p/q", "im": "r/s"}.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


class GaussRational:
    """An element a + b*i of Q(i) with exact rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *a):
        raise AttributeError("GaussRational is immutable")

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        other = as_gauss(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        other = as_gauss(other)
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        return as_gauss(other) - self

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        other = as_gauss(other)
        return GaussRational(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        other = as_gauss(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussRational(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction, GaussRational)):
            return NotImplemented
        return as_gauss(other) / self

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """The field norm re^2 + im^2 (zero iff the scalar is zero)."""
        return self.re * self.re + self.im * self.im

    # -- predicates / hashing ------------------------------------------
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_rational(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        im = "i" if self.im == 1 else ("-i" if self.im == -1 else f"{format_rational(self.im)}i")
        if self.re == 0:
            return im
        sep = "+" if self.im > 0 else ""
        return f"{format_rational(self.re)}{sep}{im}"


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)


def as_gauss(x) -> GaussRational:
    """Coerce ints, Fractions, and GaussRationals into GaussRational."""
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRational(x)
    raise TypeError(f"cannot interpret {x!r} as a Gaussian rational")


# -- serialization -----------------------------------------------------

def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(z) -> "str | dict":
    """Canonical wire form: string for rationals, {"re","im"} otherwise."""
    z = as_gauss(z)
    if z.im == 0:
        return format_rational(z.re)
    return {"re": format_rational(z.re), "im": format_rational(z.im)}


def parse_rational(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, Fraction):
        return s
    if isinstance(s, str):
        return Fraction(s.strip())
    raise ValueError(f"not a rational: {s!r}")


def parse_scalar(obj) -> GaussRational:
    """Inverse of format_scalar; also accepts bare ints and Fractions."""
    if isinstance(obj, dict):
        return GaussRational(parse_rational(obj.get("re", 0)), parse_rational(obj.get("im", 0)))
    return GaussRational(parse_rational(obj))


# -- square roots in Q(i) ----------------------------------------------

def _rational_sqrt(q: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def gauss_sqrt(z) -> "GaussRational | None":
    """A square root of z in Q(i) if one exists, else None.

    Returns the canonical root: the one with positive real part, ties
    broken by nonnegative imaginary part.
    """
    z = as_gauss(z)
    if z.is_zero():
        return ZERO
    if z.im == 0:
        r = _rational_sqrt(z.re)
        if r is not None:
            return GaussRational(r)
        r = _rational_sqrt(-z.re)
        if r is not None:
            return GaussRational(0, r)
        return None
    # w = u + v*i with u^2 - v^2 = re, 2uv = im; |w|^2 = sqrt(re^2 + im^2)
    m = _rational_sqrt(z.norm())
    if m is None:
        return None
    u2 = (z.re + m) / 2
    u = _rational_sqrt(u2)
    if u is None or u == 0:
        return None
    v = z.im / (2 * u)
    w = GaussRational(u, v)
    if w.re < 0 or (w.re == 0 and w.im < 0):
        w = -w
    return w
