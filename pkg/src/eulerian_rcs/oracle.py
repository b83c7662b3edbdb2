"""Exact univariate polynomials and certified real-root isolation.

Sturm chains are built on the square-free part with every member scaled to a
primitive integer polynomial by a *positive* factor, so sign variations are
preserved while coefficient growth stays tame.  With a square-free input the
variation count is right-continuous, hence ``V(a) - V(b)`` counts distinct
roots in the half-open interval ``(a, b]`` for any ``a < b``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .exact import DyadicInterval, Ordering, RadicalExpr, as_rational, compare

DEFAULT_WIDTH = Fraction(1, 1 << 64)


class UniPoly:
    """Dense univariate polynomial with Fraction coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self), len(other))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(self) - len(other) + 1, 0)
        lead = other.lead
        for k in range(len(rem) - len(other), -1, -1):
            q = rem[k + len(other) - 1] / lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return UniPoly(quot), UniPoly(rem[:len(other) - 1])

    def __floordiv__(self, other):
        return self.divmod(_as_poly(other))[0]

    def __mod__(self, other):
        return self.divmod(_as_poly(other))[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation at a rational or a :class:`RadicalExpr`."""
        if isinstance(x, RadicalExpr):
            acc = RadicalExpr(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reflect(self) -> "UniPoly":
        """p(-x)."""
        return UniPoly([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def reversed(self) -> "UniPoly":
        """x^deg * p(1/x)."""
        return UniPoly(list(reversed(self.coeffs)))

    def monic(self) -> "UniPoly":
        return UniPoly([c / self.lead for c in self.coeffs])

    def primitive(self) -> "UniPoly":
        """Positive rescaling to coprime integer coefficients."""
        if self.is_zero():
            return self
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = reduce(math.gcd, ints, 0)
        return UniPoly([Fraction(c // g) for c in ints])

    def sign_at(self, x) -> int:
        x = as_rational(x)
        v = self(x)
        return (v > 0) - (v < 0)

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]


def _as_poly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    return UniPoly([as_rational(x)])


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd (zero if both are zero)."""
    a, b = p.primitive(), q.primitive()
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic() if not a.is_zero() else a


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree <= 0:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).primitive()


def cauchy_bound(p: UniPoly) -> Fraction:
    """1 + max |c_i / c_deg|: every root lies strictly inside (-B, B)."""
    if p.degree < 1:
        return Fraction(1)
    lead = abs(p.lead)
    return 1 + max(abs(c) / lead for c in p.coeffs[:-1])


@dataclass(frozen=True)
class SturmChain:
    polys: tuple

    @classmethod
    def of(cls, p: UniPoly) -> "SturmChain":
        sq = squarefree_part(p)
        chain = [sq]
        if sq.degree >= 1:
            chain.append(sq.derivative().primitive())
            while True:
                r = chain[-2] % chain[-1]
                if r.is_zero():
                    break
                chain.append((-r).primitive())
        return cls(tuple(chain))

    def variations(self, x) -> int:
        x = as_rational(x)
        signs = []
        for q in self.polys:
            s = _int_sign_at(q, x)
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo, hi) -> int:
        """Distinct real roots in ``(lo, hi]``."""
        lo, hi = as_rational(lo), as_rational(hi)
        if lo >= hi:
            return 0
        return self.variations(lo) - self.variations(hi)


def _int_sign_at(q: UniPoly, x: Fraction) -> int:
    """Sign of an integer polynomial at u/v, via sum c_i u^i v^(d-i)."""
    u, v = x.numerator, x.denominator
    acc = 0
    vp = 1
    for c in reversed(q.coeffs):
        acc = acc * u + c.numerator * vp
        vp *= v
    return (acc > 0) - (acc < 0)


@lru_cache(maxsize=256)
def sturm_chain(p: UniPoly) -> SturmChain:
    return SturmChain.of(p)


def sturm_count(p, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    p = _as_poly(p) if not isinstance(p, UniPoly) else p
    if p.is_zero():
        raise ValueError("zero polynomial has no finite root count")
    return sturm_chain(p).count(lo, hi)


def real_root_profile(coeffs) -> tuple[int, int]:
    """(number of distinct real roots, degree of the square-free part)."""
    p = coeffs if isinstance(coeffs, UniPoly) else UniPoly(coeffs)
    if p.is_zero():
        raise ValueError("zero polynomial")
    sq = squarefree_part(p)
    if sq.degree < 1:
        return 0, 0
    b = cauchy_bound(sq)
    return sturm_count(sq, -b, b), sq.degree


def is_real_rooted(p) -> bool:
    """All roots real (multiplicities handled through the square-free part)."""
    real, degree = real_root_profile(p)
    return real == degree


def is_palindromic(p) -> bool:
    cs = p.coeffs if isinstance(p, UniPoly) else tuple(as_rational(c) for c in p)
    return tuple(cs) == tuple(reversed(cs))


@dataclass(frozen=True)
class RootInterval:
    """Half-open interval ``(lo, hi]`` holding exactly one root of ``poly``.

    ``poly`` is stored square-free and primitive.  The endpoints are dyadic
    (or an exact root when ``lo == hi`` is never used: an exactly known root
    is represented by ``exact``).
    """

    poly: UniPoly
    lo: Fraction
    hi: Fraction
    exact: Fraction | None = field(default=None, compare=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def isolates(self) -> bool:
        return sturm_count(self.poly, self.lo, self.hi) == 1

    def interval(self) -> DyadicInterval:
        if self.exact is not None:
            return DyadicInterval.point(self.exact)
        return DyadicInterval(self.lo, self.hi)

    def contains(self, x) -> bool:
        return self.lo < x <= self.hi

    def bisect(self) -> "RootInterval":
        if self.exact is not None:
            return self
        mid = (self.lo + self.hi) / 2
        if self.poly.sign_at(mid) == 0:
            return RootInterval(self.poly, self.lo, mid, exact=mid)
        if sturm_count(self.poly, self.lo, mid) == 1:
            return RootInterval(self.poly, self.lo, mid)
        return RootInterval(self.poly, mid, self.hi)

    def refine(self, width=DEFAULT_WIDTH) -> "RootInterval":
        width = as_rational(width)
        r = self
        while r.exact is None and r.width > width:
            r = r.bisect()
        return r

    def compare(self, other) -> Ordering:
        """Exact ordering of this root against a rational, surd, or another root."""
        if isinstance(other, RootInterval):
            return _compare_roots(self, other)
        value = RadicalExpr.coerce(other)
        if self.exact is not None:
            return compare(RadicalExpr(self.exact), value)
        if self.poly(value).sign() == 0:
            if self.lo < value <= self.hi:
                return Ordering.EQUAL
        r = self
        bits = 64
        while True:
            enc = value.interval(bits)
            if r.exact is not None:
                return compare(RadicalExpr(r.exact), value)
            if enc.hi <= r.lo:
                return Ordering.GREATER
            if enc.lo > r.hi:
                return Ordering.LESS
            r = r.bisect()
            bits += 2

    def __float__(self):
        return float(self.interval().midpoint)


def _compare_roots(x: RootInterval, y: RootInterval) -> Ordering:
    if x.exact is not None:
        return Ordering(-y.compare(x.exact))
    if y.exact is not None:
        return x.compare(y.exact)
    lo, hi = max(x.lo, y.lo), min(x.hi, y.hi)
    if lo < hi:
        g = poly_gcd(x.poly, y.poly)
        if g.degree >= 1 and sturm_count(g, lo, hi) >= 1:
            return Ordering.EQUAL
    while True:
        if x.hi <= y.lo:
            return Ordering.LESS
        if y.hi <= x.lo:
            return Ordering.GREATER
        if x.exact is not None or y.exact is not None:
            return _compare_roots(x, y)
        if x.width >= y.width:
            x = x.bisect()
        else:
            y = y.bisect()


def isolate_roots(p: UniPoly, lo=None, hi=None) -> list[RootInterval]:
    """Isolating intervals for all distinct real roots of ``p`` in ``(lo, hi]``, ascending."""
    sq = squarefree_part(p)
    if sq.degree < 1:
        return []
    b = cauchy_bound(sq)
    lo = -b if lo is None else as_rational(lo)
    hi = b if hi is None else as_rational(hi)
    out = []
    stack = [(lo, hi)]
    while stack:
        a, c = stack.pop()
        k = sturm_count(sq, a, c)
        if k == 0:
            continue
        if k == 1:
            out.append(RootInterval(sq, a, c))
            continue
        mid = (a + c) / 2
        stack.append((mid, c))
        stack.append((a, mid))
    out.sort(key=lambda r: r.lo)
    return out


def _dyadic_above(b: Fraction) -> Fraction:
    k = 0
    while Fraction(1 << k) < b:
        k += 1
    return Fraction(1 << k)


def extreme_real_root(p: UniPoly, which: str, width=DEFAULT_WIDTH) -> RootInterval:
    """Smallest (``which='min'``) or largest (``'max'``) real root, refined to ``width``."""
    sq = squarefree_part(p)
    if sq.degree < 1:
        raise ValueError("polynomial has no roots")
    b = _dyadic_above(cauchy_bound(sq))
    lo, hi = -b, b
    total = sturm_count(sq, lo, hi)
    if total == 0:
        raise ValueError("no real roots")
    while total > 1:
        mid = (lo + hi) / 2
        left = sturm_count(sq, lo, mid)
        if which == "min":
            if left >= 1:
                hi, total = mid, left
            else:
                lo = mid
        else:
            if total - left >= 1:
                lo, total = mid, total - left
            else:
                hi = mid
    return RootInterval(sq, lo, hi).refine(width)


@lru_cache(maxsize=None)
def eulerian_unipoly(n: int) -> UniPoly:
    from .counting import eulerian_poly

    return UniPoly(eulerian_poly(n))


def extreme_root(n: int, width=DEFAULT_WIDTH) -> RootInterval:
    """Enclosure of q_1, the leftmost (most negative) root of A_n."""
    return extreme_real_root(eulerian_unipoly(n), "min", width)


def innermost_root(n: int, width=DEFAULT_WIDTH) -> RootInterval:
    """Enclosure of q_n, the root of A_n closest to zero."""
    return extreme_real_root(eulerian_unipoly(n), "max", width)


def abs_extreme_root(n: int, width=DEFAULT_WIDTH) -> RootInterval:
    """|q_1| as the largest root of A_n(-t)."""
    return extreme_real_root(eulerian_unipoly(n).reflect(), "max", width)


def quadratic_roots(p: UniPoly) -> list[RadicalExpr]:
    """Exact real roots of a degree-1 or degree-2 polynomial, ascending."""
    if p.degree == 1:
        return [RadicalExpr(-p[0] / p[1])]
    if p.degree != 2:
        raise ValueError("degree must be 1 or 2")
    c, b, a = p.coeffs
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    roots = [RadicalExpr.quadratic_root(a, b, c, -1), RadicalExpr.quadratic_root(a, b, c, +1)]
    roots.sort(key=lambda r: r.interval(80).lo)
    if roots[0] == roots[1]:
        return roots[:1]
    return roots
