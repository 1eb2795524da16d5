"""Exact scalars in Q and in a real quadratic field Q(sqrt(d)).

A :class:`Scalar` denotes the real number ``a + b*sqrt(d)`` with ``a`` and
``b`` rational and ``d`` a squarefree integer greater than one.  Purely
rational scalars carry no radicand, so ``Scalar(1/2)`` equals ``Fraction(1, 2)``
and mixes freely with any quadratic field.  Mixing two different radicands
raises :class:`FieldMismatchError`.

Everything here is exact; floats are never consulted, not even for ordering.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import floor, isqrt
from numbers import Rational
from typing import Union

__all__ = [
    "Scalar",
    "FieldMismatchError",
    "ScalarParseError",
    "as_scalar",
    "parse_scalar",
    "format_scalar",
    "is_squarefree",
    "sqrt",
]

ScalarLike = Union["Scalar", int, Fraction]


class FieldMismatchError(ValueError):
    """Two irrational scalars live in different quadratic fields."""


class ScalarParseError(ValueError):
    """Text does not follow the scalar grammar."""

    def __init__(self, token: str, reason: str):
        self.token = token
        super().__init__(f"{reason}: {token!r}")


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def _check_radicand(d: int) -> None:
    if not isinstance(d, int) or d < 2 or not is_squarefree(d):
        raise ValueError(f"radicand must be a squarefree integer > 1, got {d!r}")


def _join(d1, d2):
    if d1 is None:
        return d2
    if d2 is None or d1 == d2:
        return d1
    raise FieldMismatchError(f"cannot combine Q(sqrt({d1})) with Q(sqrt({d2}))")


class Scalar:
    """The real number ``a + b*sqrt(d)``.  Immutable and hashable."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: ScalarLike = 0, b: ScalarLike = 0, d: int | None = None):
        if isinstance(a, Scalar):
            if b or d is not None:
                raise TypeError("cannot combine a Scalar rational part with extra parts")
            self.a, self.b, self.d = a.a, a.b, a.d
            return
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            d = None
        else:
            if d is None:
                raise ValueError("a nonzero radical part needs a radicand")
            _check_radicand(d)
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def _make(cls, a: Fraction, b: Fraction, d):
        # trusted constructor: skips validation
        obj = object.__new__(cls)
        obj.a = a
        if b == 0:
            obj.b = b
            obj.d = None
        else:
            obj.b = b
            obj.d = d
        return obj

    # -- predicates ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        return _sign(self.a, self.b, self.d)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.b == 0:
            return Scalar._make(self.a + other.a, self.b, self.d)
        if self.b == 0:
            return Scalar._make(self.a + other.a, other.b, other.d)
        d = _join(self.d, other.d)
        return Scalar._make(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.b == 0:
            return Scalar._make(self.a * other.a, self.b * other.a, self.d)
        if self.b == 0:
            return Scalar._make(self.a * other.a, self.a * other.b, other.d)
        d = _join(self.d, other.d)
        return Scalar._make(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.b == 0:
            if self.a == 0:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar._make(1 / self.a, self.b, None)
        norm = self.a * self.a - self.b * self.b * self.d
        # norm vanishes only for a = b = 0 since d is not a square
        return Scalar._make(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.b == 0:
            if other.a == 0:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar._make(self.a / other.a, self.b / other.a, self.d)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- order --------------------------------------------------------------

    def compare(self, other: ScalarLike) -> int:
        """Return -1, 0 or 1 as ``self`` is less than, equal to or greater than ``other``."""
        other = _coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare Scalar with {type(other).__name__}")
        if self.b == 0 and other.b == 0:
            return (self.a > other.a) - (self.a < other.a)
        d = _join(self.d, other.d)
        return _sign(self.a - other.a, self.b - other.b, d)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.b != other.b:
            return False
        if self.b != 0 and self.d != other.d:
            return False
        return self.a == other.a

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        if _coerce(other) is NotImplemented:
            return NotImplemented
        return self.compare(other) < 0

    def __le__(self, other):
        if _coerce(other) is NotImplemented:
            return NotImplemented
        return self.compare(other) <= 0

    def __gt__(self, other):
        if _coerce(other) is NotImplemented:
            return NotImplemented
        return self.compare(other) > 0

    def __ge__(self, other):
        if _coerce(other) is NotImplemented:
            return NotImplemented
        return self.compare(other) >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- integer and fractional parts --------------------------------------

    def floor_frac(self) -> tuple[int, "Scalar"]:
        """Split into ``(k, r)`` with ``self == k + r``, ``k`` integer and ``0 <= r < 1``."""
        if self.b == 0:
            k = floor(self.a)
            return k, Scalar._make(self.a - k, self.b, None)
        k = floor(self.a) + _floor_radical(self.b, self.d)
        # fractional parts of the two summands add up to something in [0, 2)
        if _sign(self.a - (k + 1), self.b, self.d) >= 0:
            k += 1
        return k, Scalar._make(self.a - k, self.b, self.d)

    def __floor__(self) -> int:
        return self.floor_frac()[0]

    def frac(self) -> "Scalar":
        return self.floor_frac()[1]

    def __float__(self):
        if self.b == 0:
            return float(self.a)
        return float(self.a) + float(self.b) * self.d ** 0.5

    def decimal(self, digits: int = 30) -> str:
        """Decimal string correct to ``digits`` significant digits (truncated, not rounded)."""
        return _decimal(self, digits)

    # -- text --------------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return Scalar._make(Fraction(x), Fraction(0), None)
    return NotImplemented


def as_scalar(x) -> Scalar:
    """Convert ints, Fractions, scalar text or Scalars to a :class:`Scalar`."""
    if isinstance(x, str):
        return parse_scalar(x)
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an exact scalar")
    return s


def sqrt(d: int) -> Scalar:
    """``sqrt(d)`` as an element of ``Q(sqrt(d))``."""
    _check_radicand(d)
    return Scalar(0, 1, d)


def _sign(a: Fraction, b: Fraction, d) -> int:
    """Sign of ``a + b*sqrt(d)`` by sign analysis and comparison of squares."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a >= 0 and b > 0:
        return 1
    if a <= 0 and b < 0:
        return -1
    # opposite signs: compare a^2 with b^2 d, cross-multiplied to integers
    p, q = a.numerator, a.denominator
    r, s = b.numerator, b.denominator
    lhs = p * p * s * s
    rhs = r * r * d * q * q
    if a > 0:
        return (lhs > rhs) - (lhs < rhs)
    return (lhs < rhs) - (lhs > rhs)


def _floor_radical(b: Fraction, d: int) -> int:
    """floor(b*sqrt(d)) for rational ``b`` and non-square ``d``."""
    if b == 0:
        return 0
    # floor(sqrt(y)) == isqrt(floor(y)) for y >= 0
    y = b * b * d
    root = isqrt(y.numerator // y.denominator)
    if b > 0:
        return root
    # b*sqrt(d) is irrational, so it is never an integer
    return -root - 1


def _decimal(x: Scalar, digits: int) -> str:
    if not x:
        return "0"
    sign = "-" if x.sign() < 0 else ""
    x = abs(x)
    # find exponent e with 10**e <= x < 10**(e+1)
    e = 0
    while x >= Fraction(10) ** (e + 1):
        e += 1
    while x < Fraction(10) ** e:
        e -= 1
    scale = digits - 1 - e
    scaled = x * (Fraction(10) ** scale)
    n = floor(scaled)
    text = str(n)
    if scale <= 0:
        return sign + text + "0" * (-scale)
    if len(text) <= scale:
        text = "0" * (scale - len(text) + 1) + text
    return f"{sign}{text[:-scale]}.{text[-scale:]}"


# -- text grammar -----------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_URAT = r"\d+(?:/\d+)?"
_RADICAL = rf"(?P<sign>[+-]?)(?:(?P<b>{_URAT})\*)?sqrt\((?P<d>[+-]?\d+)\)"
_RATIONAL_RE = re.compile(rf"(?P<a>{_RAT})")
_RADICAL_RE = re.compile(_RADICAL)
_MIXED_RE = re.compile(rf"(?P<a>{_RAT})(?P<op>[+-]){_RADICAL}")


def _parse_rational(tok: str) -> Fraction:
    if "/" in tok:
        p, q = tok.split("/")
        if int(q) == 0:
            raise ScalarParseError(tok, "zero denominator")
        return Fraction(int(p), int(q))
    return Fraction(int(tok))


def parse_scalar(text: str) -> Scalar:
    """Parse ``p/q`` or ``p/q+r/s*sqrt(D)``.

    Integers are accepted where a fraction is expected, the radical
    coefficient may be omitted (``1/2+sqrt(2)``) and may carry its own sign
    (``1/2+-1/3*sqrt(2)`` is the same as ``1/2-1/3*sqrt(2)``).
    """
    if not isinstance(text, str):
        raise TypeError("parse_scalar expects a string")
    compact = "".join(text.split())
    m = _RATIONAL_RE.fullmatch(compact)
    if m:
        return Scalar._make(_parse_rational(m.group("a")), Fraction(0), None)
    m = _MIXED_RE.fullmatch(compact) or _RADICAL_RE.fullmatch(compact)
    if m is None:
        raise ScalarParseError(text, "malformed scalar")
    groups = m.groupdict()
    a = _parse_rational(groups["a"]) if groups.get("a") else Fraction(0)
    b = _parse_rational(groups["b"]) if groups["b"] else Fraction(1)
    if groups["sign"] == "-":
        b = -b
    if groups.get("op") == "-":
        b = -b
    d = int(groups["d"])
    if d < 2 or not is_squarefree(d):
        raise ScalarParseError(groups["d"], "radicand must be squarefree and not a perfect square")
    return Scalar(a, b, d)


def format_scalar(x: ScalarLike) -> str:
    """Canonical text for a scalar; ``parse_scalar(format_scalar(x)) == x``."""
    x = as_scalar(x)
    if x.b == 0:
        return str(x.a)
    op = "-" if x.b < 0 else "+"
    return f"{x.a}{op}{abs(x.b)}*sqrt({x.d})"
