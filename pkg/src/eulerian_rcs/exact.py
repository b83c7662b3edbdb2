"""Exact scalars: rationals, dyadic enclosures and elements of Q(sqrt(d)).

Rationals are plain :class:`fractions.Fraction` values.  A :class:`RadicalExpr`
holds ``a + b*sqrt(d)`` with rational ``a, b`` and a nonnegative integer
radicand; its sign is decided exactly by comparing squares, never by floating
point.  :class:`DyadicInterval` is used to enclose such numbers when a decimal
rendering or a cheap ordering test is wanted.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151)


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def rational_str(q: Fraction) -> str:
    """Bit-exact ``"p/q"`` rendering (denominator always written)."""
    return f"{q.numerator}/{q.denominator}"


def _sign(q) -> int:
    return (q > 0) - (q < 0)


def _ceil_log2(q: Fraction) -> int:
    """Smallest k >= 0 with |q| <= 2**k."""
    q = abs(q)
    if q <= 1:
        return 0
    k = (q.numerator // q.denominator).bit_length()
    return k if Fraction(2) ** k >= q else k + 1


def _floor_to_dyadic(q: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(math.floor(q * scale), scale)


def _ceil_to_dyadic(q: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(math.ceil(q * scale), scale)


@dataclass(frozen=True)
class DyadicInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints.

    Endpoints produced by :func:`sqrt_interval` and :meth:`outward` are dyadic;
    arithmetic keeps them exact and callers round outward when sizes matter.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value) -> "DyadicInterval":
        value = as_rational(value)
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def outward(self, bits: int) -> "DyadicInterval":
        """Round endpoints outward onto the grid ``2**-bits``."""
        return DyadicInterval(_floor_to_dyadic(self.lo, bits), _ceil_to_dyadic(self.hi, bits))

    def relative_width(self) -> Fraction:
        """Width divided by the smallest absolute value in the interval (inf if it spans 0)."""
        if self.lo <= 0 <= self.hi:
            return Fraction(10**100) if self.width else Fraction(0)
        return self.width / min(abs(self.lo), abs(self.hi))

    def _coerce(self, other) -> "DyadicInterval":
        if isinstance(other, DyadicInterval):
            return other
        return DyadicInterval.point(other)

    def __neg__(self):
        return DyadicInterval(-self.hi, -self.lo)

    def __add__(self, other):
        other = self._coerce(other)
        return DyadicInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return DyadicInterval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "DyadicInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return DyadicInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __float__(self):
        return float(self.midpoint)


def sqrt_interval(x, bits: int) -> DyadicInterval:
    """Dyadic enclosure of ``sqrt(x)`` of width at most ``2**-bits``."""
    x = as_rational(x)
    if x < 0:
        raise ValueError(f"square root of negative number {x}")
    if bits < 0:
        raise ValueError("bits must be nonnegative")
    k = bits + 1
    scaled = x * (1 << (2 * k))
    low_int = math.floor(scaled)
    high_int = math.ceil(scaled)
    lo_root = math.isqrt(low_int)
    hi_root = math.isqrt(high_int)
    if hi_root * hi_root != high_int:
        hi_root += 1
    return DyadicInterval(Fraction(lo_root, 1 << k), Fraction(hi_root, 1 << k))


def _strip_square_factors(d: int) -> tuple[int, int]:
    """Write d = f*f*core, removing perfect squares and small prime squares."""
    root = math.isqrt(d)
    if root * root == d:
        return root, 1
    factor = 1
    for p in _SMALL_PRIMES:
        pp = p * p
        if pp > d:
            break
        while d % pp == 0:
            d //= pp
            factor *= p
    return factor, d


Scalar = Union[int, Fraction, "RadicalExpr"]


class RadicalExpr:
    """The real number ``a + b*sqrt(d)`` with rational a, b and integer d >= 0.

    The radicand is normalised to a nonnegative integer with obvious square
    factors pulled out, and ``b = d = 0`` whenever the value is rational.
    Arithmetic is closed inside one quadratic field; mixing two different
    irrational radicands raises ``ValueError`` (use :func:`compare` for
    ordering across fields).
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=0):
        a = as_rational(a)
        b = as_rational(b)
        d = as_rational(d)
        if d < 0:
            raise ValueError(f"negative radicand {d}")
        if b == 0 or d == 0:
            a, b, d = a, Fraction(0), 0
        else:
            # sqrt(p/q) = sqrt(p*q)/q
            b = b / d.denominator
            d_int = d.numerator * d.denominator
            factor, core = _strip_square_factors(d_int)
            b = b * factor
            if core == 1:
                a, b, d_int = a + b, Fraction(0), 0
            d = core if core != 1 else 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", int(d))

    def __setattr__(self, name, value):
        raise AttributeError("RadicalExpr is immutable")

    @classmethod
    def coerce(cls, value) -> "RadicalExpr":
        if isinstance(value, RadicalExpr):
            return value
        return cls(as_rational(value))

    @classmethod
    def quadratic_root(cls, a2, a1, a0, branch: int) -> "RadicalExpr":
        """Root ``(-a1 + branch*sqrt(a1^2 - 4 a2 a0)) / (2 a2)`` of ``a2 y^2 + a1 y + a0``."""
        a2, a1, a0 = as_rational(a2), as_rational(a1), as_rational(a0)
        if a2 == 0:
            raise ZeroDivisionError("leading coefficient is zero")
        disc = a1 * a1 - 4 * a2 * a0
        if disc < 0:
            raise ValueError("complex roots")
        return cls(-a1 / (2 * a2), Fraction(branch) / (2 * a2), disc)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        if self.is_rational:
            return f"RadicalExpr({self.a})"
        return f"RadicalExpr({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self):
        if self.is_rational:
            return str(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt({self.d})"

    def conjugate(self) -> "RadicalExpr":
        return RadicalExpr(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """``(a + b sqrt d)(a - b sqrt d) = a^2 - b^2 d``."""
        return self.a * self.a - self.b * self.b * self.d

    # -- arithmetic inside one field -------------------------------------------------

    def _align(self, other) -> tuple["RadicalExpr", "RadicalExpr"]:
        other = RadicalExpr.coerce(other)
        if self.is_rational or other.is_rational or self.d == other.d:
            return self, other
        prod = self.d * other.d
        root = math.isqrt(prod)
        if root * root == prod:
            # sqrt(d2) = root/d1 * sqrt(d1)
            return self, RadicalExpr(other.a, other.b * Fraction(root, self.d), self.d)
        raise ValueError(f"cannot combine sqrt({self.d}) and sqrt({other.d}) in one field")

    def _field(self, other: "RadicalExpr") -> int:
        return self.d if not self.is_rational else other.d

    def __add__(self, other):
        x, y = self._align(other)
        return RadicalExpr(x.a + y.a, x.b + y.b, x._field(y))

    __radd__ = __add__

    def __neg__(self):
        return RadicalExpr(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-RadicalExpr.coerce(other))

    def __rsub__(self, other):
        return RadicalExpr.coerce(other) - self

    def __mul__(self, other):
        x, y = self._align(other)
        d = x._field(y)
        return RadicalExpr(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        x, y = self._align(other)
        norm = y.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return (x * y.conjugate()) * RadicalExpr(1 / norm)

    def __rtruediv__(self, other):
        return RadicalExpr.coerce(other) / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers")
        result = RadicalExpr(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- enclosures and ordering ------------------------------------------------------

    def interval(self, bits: int = 64) -> DyadicInterval:
        """Enclosure of width at most ``2**-bits``."""
        if self.is_rational:
            return DyadicInterval.point(self.a)
        extra = _ceil_log2(self.b) + 1
        root = sqrt_interval(self.d, bits + extra)
        return self.a + root * self.b

    def __float__(self):
        return float(self.interval(60).midpoint)

    def sign(self) -> int:
        return sign_of(self)

    def __eq__(self, other):
        if not isinstance(other, (RadicalExpr, int, Fraction)):
            return NotImplemented
        return compare(self, other) == Ordering.EQUAL

    def __hash__(self):
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return compare(self, other) == Ordering.LESS

    def __le__(self, other):
        return compare(self, other) != Ordering.GREATER

    def __gt__(self, other):
        return compare(self, other) == Ordering.GREATER

    def __ge__(self, other):
        return compare(self, other) != Ordering.LESS


def sign_of(e: RadicalExpr) -> int:
    """Exact sign of ``a + b*sqrt(d)``.

    When the two terms have opposite signs the larger magnitude wins, decided by
    comparing ``a^2`` with ``b^2 d``.
    """
    e = RadicalExpr.coerce(e)
    sa = _sign(e.a)
    sb = _sign(e.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    diff = e.a * e.a - e.b * e.b * e.d
    if diff > 0:
        return sa
    if diff < 0:
        return sb
    return 0


def _to_ordering(s: int) -> Ordering:
    return Ordering(_sign(s))


def compare(x, y, accelerate: bool = True) -> Ordering:
    """Exact ordering of two quadratic surds, possibly from different fields.

    A 64-bit enclosure test settles well-separated values; otherwise the
    difference ``A + B sqrt(d1) + C sqrt(d2)`` is signed by isolating the
    ``sqrt(d2)`` term and squaring once more, which also decides equality.
    """
    x = RadicalExpr.coerce(x)
    y = RadicalExpr.coerce(y)
    if accelerate and not (x.is_rational and y.is_rational):
        ix, iy = x.interval(64), y.interval(64)
        if ix.hi < iy.lo:
            return Ordering.LESS
        if iy.hi < ix.lo:
            return Ordering.GREATER
    try:
        return _to_ordering(sign_of(x - y))
    except ValueError:
        pass
    part = RadicalExpr(x.a - y.a, x.b, x.d)
    coeff = -y.b
    sp = sign_of(part)
    sq = _sign(coeff)
    if sp == 0:
        return _to_ordering(sq)
    if sp == sq:
        return _to_ordering(sp)
    # opposite signs: compare |part| with |coeff| sqrt(d2)
    gap = sign_of(part * part - coeff * coeff * y.d)
    if gap > 0:
        return _to_ordering(sp)
    if gap < 0:
        return _to_ordering(sq)
    return Ordering.EQUAL


def enclose(value, bits: int = 64) -> DyadicInterval:
    """Enclosure of a Fraction, int or RadicalExpr."""
    if isinstance(value, RadicalExpr):
        return value.interval(bits)
    return DyadicInterval.point(as_rational(value))
