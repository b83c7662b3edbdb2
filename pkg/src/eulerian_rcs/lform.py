"""The linear form L_p on monomials of degree at most three.

L_p is read off the power series  -log(p(-x)/p(0)) = sum (1/|a|) binom(|a|; a) L_p(x^a) x^a,
with L_p(1) = deg p.  :func:`lform_series` expands that series directly and is
the reference; the remaining functions are closed-form shortcuts that the test
suite checks against it.

Monomials are sorted tuples of variable indices, e.g. ``(2, 2, 5)`` for
x_2^2 x_5 and ``()`` for 1.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from math import factorial, prod
from typing import Mapping

from .exact import as_rational

MAX_DEGREE = 3


def monomial(*indices: int) -> tuple:
    if len(indices) > MAX_DEGREE:
        raise ValueError("monomials of degree > 3 are not supported")
    return tuple(sorted(indices))


def monomials_upto3(variables) -> list[tuple]:
    """All monomials of degree 0..3 in the given variables."""
    out = []
    for d in range(MAX_DEGREE + 1):
        out.extend(combinations_with_replacement(sorted(variables), d))
    return out


def _multinomial(mono: tuple) -> int:
    return factorial(len(mono)) // prod(factorial(c) for c in Counter(mono).values())


def _truncated_product(f: Mapping, g: Mapping) -> dict:
    out: dict = {}
    for a, ca in f.items():
        for b, cb in g.items():
            if len(a) + len(b) > MAX_DEGREE:
                continue
            key = tuple(sorted(a + b))
            out[key] = out.get(key, 0) + ca * cb
    return out


@dataclass(frozen=True)
class Trunc3Polynomial:
    """Degree <= 3 truncation of a polynomial normalized to p(0) = 1.

    ``coeffs`` maps sorted index tuples to rationals; missing keys are zero.
    ``deg`` is the degree of the full polynomial (the truncation cannot tell).
    """

    variables: tuple
    coeffs: Mapping
    deg: int
    names: Mapping = field(default_factory=dict, compare=False)

    def __post_init__(self):
        clean = {}
        for key, value in dict(self.coeffs).items():
            key = tuple(sorted(key))
            if not key:
                if as_rational(value) != 1:
                    raise ValueError("constant term must be 1")
                continue
            if len(key) > MAX_DEGREE:
                continue
            if any(v not in self.variables for v in key):
                raise ValueError(f"monomial {key} uses an undeclared variable")
            value = as_rational(value)
            if value:
                clean[key] = value
        object.__setattr__(self, "variables", tuple(sorted(self.variables)))
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_coefficients(cls, coeffs, deg: int | None = None, variable: int = 1) -> "Trunc3Polynomial":
        """Univariate truncation from a constant-first coefficient vector."""
        coeffs = [as_rational(c) for c in coeffs]
        if not coeffs or coeffs[0] == 0:
            raise ValueError("p(0) must be nonzero")
        c0 = coeffs[0]
        table = {(variable,) * k: c / c0 for k, c in enumerate(coeffs[: MAX_DEGREE + 1]) if k}
        degree = len(coeffs) - 1 if deg is None else deg
        while degree > 0 and deg is None and coeffs[degree] == 0:
            degree -= 1
        return cls((variable,), table, degree)

    def coefficient(self, *indices: int) -> Fraction:
        if not indices:
            return Fraction(1)
        return self.coeffs.get(tuple(sorted(indices)), Fraction(0))

    def name(self, var: int) -> str:
        return self.names.get(var, f"x{var}")

    @cached_property
    def log_series(self) -> dict:
        """Coefficients of -log p(-x) up to degree 3."""
        u = {k: (-1) ** len(k) * c for k, c in self.coeffs.items()}
        u2 = _truncated_product(u, u)
        u3 = _truncated_product(u2, u)
        series: dict = {}
        for table, weight in ((u, Fraction(-1)), (u2, Fraction(1, 2)), (u3, Fraction(-1, 3))):
            for k, c in table.items():
                series[k] = series.get(k, 0) + weight * c
        return series


def lform_series(t: Trunc3Polynomial, mono) -> Fraction:
    """L_p(mono) from the logarithmic series (reference implementation)."""
    mono = tuple(sorted(mono))
    if len(mono) > MAX_DEGREE:
        raise ValueError("degree > 3")
    if not mono:
        return Fraction(t.deg)
    coef = t.log_series.get(mono, Fraction(0))
    return coef * len(mono) / _multinomial(mono)


def lform_closed(t: Trunc3Polynomial, mono) -> Fraction:
    """L_p(mono) via the explicit degree <= 3 formulas."""
    mono = tuple(sorted(mono))
    a = t.coefficient
    if not mono:
        return Fraction(t.deg)
    counts = Counter(mono)
    if len(mono) == 1:
        return a(*mono)
    if len(mono) == 2:
        i, j = mono
        if i == j:
            return -2 * a(i, i) + a(i) ** 2
        return -a(i, j) + a(i) * a(j)
    if len(mono) == 3:
        if len(counts) == 1:
            (i,) = counts
            return 3 * a(i, i, i) - 3 * a(i) * a(i, i) + a(i) ** 3
        if len(counts) == 2:
            i = next(v for v, c in counts.items() if c == 2)
            j = next(v for v, c in counts.items() if c == 1)
            # minus on a_i a_ij: fixed by the series expansion
            return a(i, i, j) - a(i) * a(i, j) - a(j) * a(i, i) + a(i) ** 2 * a(j)
        i, j, k = mono
        return (a(i, j, k) - a(i) * a(j, k) - a(j) * a(i, k) - a(k) * a(i, j)
                + 2 * a(i) * a(j) * a(k)) / 2
    raise ValueError("degree > 3")


def _pow(base: int, exp: int) -> Fraction:
    return Fraction(base) ** exp


def lform_eulerian_multi(n: int, mono) -> Fraction:
    """L(mono) for the descent-top Eulerian polynomial A_n(x, 1), variables x_2..x_{n+1}."""
    mono = tuple(sorted(mono))
    if len(mono) > MAX_DEGREE:
        raise ValueError("degree > 3")
    if any(v < 2 or v > n + 1 for v in mono):
        raise ValueError(f"variable indices must lie in [2, {n + 1}]")
    if not mono:
        return Fraction(n)
    counts = Counter(mono)
    if len(mono) == 1:
        (i,) = mono
        return Fraction(2 ** (i - 1) - 1)
    if len(mono) == 2:
        i, j = mono
        if i == j:
            return Fraction((2 ** (i - 1) - 1) ** 2)
        return _pow(2, i + j - 2) - _pow(2, j - i) * _pow(3, i - 1)
    if len(counts) == 1:
        (i,) = counts
        return Fraction((2 ** (i - 1) - 1) ** 3)
    if len(counts) == 2:
        i = next(v for v, c in counts.items() if c == 2)
        j = next(v for v, c in counts.items() if c == 1)
        if i < j:
            return Fraction(1, 3) * _pow(2, j - i - 3) * (2 ** i - 2) * (3 * 4 ** i - 4 * 3 ** i)
        return Fraction(1, 3) * _pow(2, i - j - 3) * (2 ** i - 2) * (3 * 4 ** j - 4 * 3 ** j)
    i, j, k = mono
    return (_pow(2, i + j + k - 3) - _pow(2, j + k - i - 1) * _pow(3, i - 1)
            - _pow(2, i - j + k - 2) * _pow(3, j - 1) + _pow(2, 2 * i - j + k - 3) * _pow(3, j - i))


def lform_eulerian_uni(n: int, k: int) -> Fraction:
    """L(x^k) for the univariate Eulerian polynomial A_n, k = 0..3."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if k == 0:
        return Fraction(n)
    if k == 1:
        return Fraction(2 ** (n + 1) - (n + 2))
    if k == 2:
        return Fraction(2 - 2 * 3 ** (n + 1) + 4 ** (n + 1) + n)
    if k == 3:
        return Fraction(-2 - 2 ** (n + 1) * 3 ** (n + 2) + 3 * 4 ** (n + 1) + 8 ** (n + 1) - n)
    raise ValueError("only k <= 3 is supported")


def trunc3_eulerian(n: int, *, ghost: bool = False) -> Trunc3Polynomial:
    """Degree <= 3 truncation of A_n(x, 1); coefficients are exact descent-top counts."""
    from .counting import r_count

    variables = tuple(range(2, n + 2))
    table = {}
    for size in (1, 2, 3):
        for S in combinations(variables, size):
            table[S] = r_count(n, S)
    if ghost:
        variables = (1,) + variables
    return Trunc3Polynomial(variables, table, n)


def trunc3_eulerian_uni(n: int) -> Trunc3Polynomial:
    """Degree <= 3 truncation of the univariate A_n."""
    from .counting import eulerian_poly

    t = Trunc3Polynomial.from_coefficients(eulerian_poly(n), deg=n)
    return Trunc3Polynomial(t.variables, t.coeffs, t.deg, names={1: "x"})
