from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerian_rcs.counting import eulerian_poly
from eulerian_rcs.exact import Ordering, RadicalExpr
from eulerian_rcs.oracle import (RootInterval, UniPoly, abs_extreme_root, cauchy_bound, eulerian_unipoly,
                                 extreme_root, innermost_root, is_palindromic, is_real_rooted, isolate_roots,
                                 poly_gcd, quadratic_roots, real_root_profile, squarefree_part, sturm_count)

F = Fraction
TIGHT = F(1, 2 ** 64)


def test_polynomial_arithmetic():
    p = UniPoly([1, 2, 1])
    q = UniPoly([1, 1])
    assert p.exact_div(q) == q
    assert p.derivative() == UniPoly([2, 2])
    assert p.reflect() == UniPoly([1, -2, 1])
    assert UniPoly([1, 2, 3]).reversed() == UniPoly([3, 2, 1])
    assert p(F(1, 2)) == F(9, 4)
    assert p(RadicalExpr(0, 1, 2)) == RadicalExpr(3, 2, 2)
    assert UniPoly([0, 0]).is_zero() and UniPoly().degree == -1
    with pytest.raises(ArithmeticError):
        p.exact_div(UniPoly([1, 3]))
    assert poly_gcd(p, UniPoly([-1, 0, 1])) == q
    assert squarefree_part(p * q) == q


def test_sturm_examples():
    assert sturm_count(UniPoly([1, 4, 1]), -4, 0) == 2
    assert sturm_count(UniPoly([1, 0, 1]), -10, 10) == 0
    assert sturm_count(UniPoly(eulerian_poly(3)), -100, 0) == 3
    with pytest.raises(ValueError):
        sturm_count(UniPoly(), 0, 1)


def test_sturm_counts_half_open_intervals():
    p = UniPoly([-1, 0, 1])              # roots -1 and 1
    assert sturm_count(p, -1, 1) == 1   # (-1, 1] contains only 1
    assert sturm_count(p, -2, -1) == 1
    assert sturm_count((p * p), -2, 2) == 2   # distinct roots only


@st.composite
def rational_root_products(draw):
    roots = draw(st.lists(st.fractions(min_value=-8, max_value=8, max_denominator=6), min_size=1, max_size=6))
    extra = draw(st.integers(0, 2))   # irreducible quadratics x^2 + k
    p = UniPoly([1])
    for r in roots:
        p = p * UniPoly([-r, 1])
    for k in range(extra):
        p = p * UniPoly([k + 1, 0, 1])
    return p, sorted(set(roots))


@given(rational_root_products(), st.fractions(min_value=-9, max_value=9, max_denominator=5),
       st.fractions(min_value=0, max_value=9, max_denominator=5))
@settings(max_examples=80)
def test_sturm_counts_known_roots(case, lo, span):
    p, roots = case
    hi = lo + span
    expected = sum(1 for r in roots if lo < r <= hi)
    assert sturm_count(p, lo, hi) == expected


@given(rational_root_products())
@settings(max_examples=60)
def test_isolation_finds_every_real_root(case):
    p, roots = case
    found = isolate_roots(p)
    assert len(found) == len(roots)
    for interval, root in zip(found, roots):
        assert interval.lo < root <= interval.hi
    assert real_root_profile(p)[0] == len(roots)


def test_extreme_root_examples():
    r2 = extreme_root(2)
    assert r2.width <= TIGHT and r2.compare(RadicalExpr(-2, -1, 3)) == Ordering.EQUAL
    r3 = extreme_root(3)
    assert r3.compare(RadicalExpr(-5, -2, 6)) == Ordering.EQUAL
    r1 = extreme_root(1)
    assert r1.compare(-1) == Ordering.EQUAL


def test_root_comparisons():
    r = abs_extreme_root(3)
    assert r.compare(F(9)) == Ordering.GREATER
    assert r.compare(F(10)) == Ordering.LESS
    other = RootInterval(squarefree_part(UniPoly([1, -10, 1])), F(9), F(10))
    assert r.compare(other) == Ordering.EQUAL
    assert r.compare(abs_extreme_root(2)) == Ordering.GREATER
    assert abs_extreme_root(2).compare(r) == Ordering.LESS


def test_refinement_keeps_the_root():
    r = RootInterval(squarefree_part(eulerian_unipoly(5)), -cauchy_bound(eulerian_unipoly(5)), F(-30))
    assert r.isolates
    for _ in range(30):
        r = r.bisect()
        assert r.isolates or r.exact is not None


def test_palindromic():
    assert is_palindromic(UniPoly([1, 4, 1]))
    assert not is_palindromic([1, 2, 3])
    assert all(is_palindromic(eulerian_unipoly(n)) for n in range(1, 21))


def test_real_rooted():
    assert is_real_rooted(eulerian_unipoly(4))
    assert not is_real_rooted(UniPoly([1, 0, 1]))
    assert is_real_rooted(UniPoly([1, 2, 1]))


@pytest.mark.parametrize("n", range(2, 13))
def test_eulerian_roots_simple_negative_and_reciprocal(n):
    p = eulerian_unipoly(n)
    assert poly_gcd(p, p.derivative()).degree == 0      # simple roots
    roots = isolate_roots(p)
    assert len(roots) == n
    assert all(r.hi <= 0 for r in roots)
    q1 = extreme_root(n).interval()
    qn = innermost_root(n).interval()
    product = q1 * qn
    assert product.lo >= 1 - F(1, 2 ** 40) and product.hi <= 1 + F(1, 2 ** 40)


def test_quadratic_roots():
    assert quadratic_roots(UniPoly([1, 4, 1])) == [RadicalExpr(-2, -1, 3), RadicalExpr(-2, 1, 3)]
    assert quadratic_roots(UniPoly([2, 1])) == [RadicalExpr(-2)]
    assert quadratic_roots(UniPoly([1, 0, 1])) == []
    assert quadratic_roots(UniPoly([1, 2, 1])) == [RadicalExpr(-1)]
