"""Exact scalars: rationals and elements of a real quadratic field Q(sqrt d).

Rationals are plain :class:`fractions.Fraction` objects. A field with a
radical is handled by :class:`QuadScalar`, which mixes freely with
``Fraction`` and ``int`` operands.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union

__all__ = [
    "Fraction",
    "QuadScalar",
    "ExactScalar",
    "is_squarefree",
    "sqrt_d",
    "to_scalar",
    "parse_scalar",
    "format_scalar",
    "is_zero",
]


def is_squarefree(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class QuadScalar:
    """``rat + rad * sqrt(d)`` with rational ``rat``, ``rad`` and squarefree ``d > 1``."""

    __slots__ = ("rat", "rad", "d")

    def __init__(self, rat=0, rad=0, d: int = 2):
        if d == 1 or not is_squarefree(d):
            raise ValueError(f"d must be a squarefree integer > 1, got {d}")
        self.rat = Fraction(rat)
        self.rad = Fraction(rad)
        self.d = d

    def _coerce(self, other):
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                raise ValueError(f"mixing sqrt({self.d}) and sqrt({other.d})")
            return other
        if isinstance(other, (int, Rational)):
            return QuadScalar(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadScalar(self.rat + o.rat, self.rad + o.rad, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.rat, -self.rad, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadScalar(self.rat - o.rat, self.rad - o.rad, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadScalar(
            self.rat * o.rat + self.d * self.rad * o.rad,
            self.rat * o.rad + self.rad * o.rat,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self.rat, -self.rad, self.d)

    def norm(self) -> Fraction:
        return self.rat * self.rat - self.d * self.rad * self.rad

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        num = self * o.conjugate()
        return QuadScalar(num.rat / n, num.rad / n, self.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __eq__(self, other):
        if isinstance(other, QuadScalar):
            return self.d == other.d and self.rat == other.rat and self.rad == other.rad
        if isinstance(other, (int, Rational)):
            return self.rad == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.rad == 0:
            return hash(self.rat)
        return hash((self.rat, self.rad, self.d))

    def __bool__(self):
        return bool(self.rat) or bool(self.rad)

    def _sign(self) -> int:
        # sign of rat + rad*sqrt(d), decided exactly
        a, b, d = self.rat, self.rad, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with d b^2
        diff = a * a - d * b * b
        if diff == 0:
            return 0
        return (1 if a > 0 else -1) if diff > 0 else (1 if b > 0 else -1)

    def __lt__(self, other):
        return (self - other)._sign() < 0

    def __le__(self, other):
        return (self - other)._sign() <= 0

    def __gt__(self, other):
        return (self - other)._sign() > 0

    def __ge__(self, other):
        return (self - other)._sign() >= 0

    def __repr__(self):
        return f"QuadScalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ExactScalar = Union[Fraction, QuadScalar]


def sqrt_d(d: int) -> ExactScalar:
    """The exact square root of a squarefree ``d`` (``1`` when ``d == 1``)."""
    if d == 1:
        return Fraction(1)
    return QuadScalar(0, 1, d)


def to_scalar(x, d: int = 1) -> ExactScalar:
    if isinstance(x, QuadScalar):
        if d != x.d:
            raise ValueError(f"scalar lives in Q(sqrt {x.d}), context is d={d}")
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not exact scalars")
    if isinstance(x, str):
        return parse_scalar(x, d)
    q = Fraction(x)
    return q if d == 1 else QuadScalar(q, 0, d)


def is_zero(x) -> bool:
    return not x


def _fmt_q(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Serialize as ``"p/q"`` or ``"p/q+r/s*sqrt(d)"``."""
    if isinstance(x, QuadScalar):
        if x.rad == 0:
            return _fmt_q(x.rat)
        rad = _fmt_q(abs(x.rad))
        sign = "+" if x.rad > 0 else "-"
        return f"{_fmt_q(x.rat)}{sign}{rad}*sqrt({x.d})"
    return _fmt_q(Fraction(x))


_Q = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(rf"^\s*({_Q})\s*(?:([+-])\s*(\d+(?:/\d+)?)\s*\*\s*sqrt\((\d+)\))?\s*$")


def parse_scalar(s: str, d: int = 1) -> ExactScalar:
    m = _SCALAR_RE.match(s)
    if m is None:
        raise ValueError(f"not an exact scalar: {s!r}")
    rat = Fraction(m.group(1))
    if m.group(2) is None:
        return rat if d == 1 else QuadScalar(rat, 0, d)
    rd = int(m.group(4))
    if rd != d:
        raise ValueError(f"scalar {s!r} uses sqrt({rd}) but context is d={d}")
    rad = Fraction(m.group(3))
    if m.group(2) == "-":
        rad = -rad
    return QuadScalar(rat, rad, d)
