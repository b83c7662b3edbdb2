from collections import Counter
from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerian_rcs.exact import DyadicInterval
from eulerian_rcs.lform import (Trunc3Polynomial, lform_closed, lform_eulerian_multi, lform_eulerian_uni,
                                lform_series, monomials_upto3, trunc3_eulerian, trunc3_eulerian_uni)
from eulerian_rcs.oracle import eulerian_unipoly, isolate_roots
from eulerian_rcs.perms import eulerian_bruteforce


def trunc_from_bruteforce(n):
    poly = eulerian_bruteforce(n)
    table = {tuple(sorted(tops)): c for tops, c in poly.items() if 0 < len(tops) <= 3}
    return Trunc3Polynomial(tuple(range(2, n + 2)), table, n)


def test_series_examples():
    t = trunc3_eulerian(2)
    assert lform_series(t, (2,)) == t.coefficient(2) == 1
    assert lform_series(t, (2, 3)) == 2
    assert lform_series(t, (2, 2, 3)) == 2
    assert lform_series(t, ()) == 2


def test_truncation_from_enumeration_matches_closed_counts():
    for n in range(1, 8):
        assert trunc_from_bruteforce(n) == trunc3_eulerian(n)
    assert trunc3_eulerian(3).coefficient(4) == 7
    assert trunc3_eulerian(5).coefficient(3, 3) == 0


def test_mixed_cubic_sign_regression():
    # a_iij - a_i a_ij - a_j a_ii + a_i^2 a_j; a plus sign on a_i a_ij would give 4 here
    t = trunc3_eulerian(2)
    assert lform_closed(t, (2, 2, 3)) == 2 == lform_series(t, (2, 2, 3))
    assert lform_eulerian_multi(2, (2, 2, 3)) == 2
    a = t.coefficient
    wrong = a(2, 2, 3) + a(2) * a(2, 3) - a(3) * a(2, 2) + a(2) ** 2 * a(3)
    assert wrong != 2


@pytest.mark.parametrize("n", range(1, 9))
def test_multivariate_closed_forms_match_series(n):
    t = trunc_from_bruteforce(n)
    for mono in monomials_upto3(t.variables):
        assert lform_eulerian_multi(n, mono) == lform_series(t, mono), mono
        assert lform_closed(t, mono) == lform_series(t, mono), mono


@pytest.mark.parametrize("n", range(1, 26))
def test_univariate_closed_forms_match_series(n):
    t = trunc3_eulerian_uni(n)
    for k in range(4):
        assert lform_eulerian_uni(n, k) == lform_series(t, (1,) * k)


def test_univariate_examples():
    assert [lform_eulerian_uni(2, k) for k in range(4)] == [2, 4, 14, 52]
    with pytest.raises(ValueError):
        lform_eulerian_uni(2, 4)


def test_multivariate_examples_and_domain():
    assert lform_eulerian_multi(5, (3,)) == 3
    assert lform_eulerian_multi(2, (2, 3)) == 2
    assert lform_eulerian_multi(2, (2, 3, 3)) == 6
    with pytest.raises(ValueError):
        lform_eulerian_multi(2, (4,))
    with pytest.raises(ValueError):
        lform_eulerian_multi(4, (1, 2))


@pytest.mark.parametrize("n", range(1, 7))
def test_power_sums_of_negated_inverse_roots(n):
    roots = [r.refine(Fraction(1, 2 ** 110)).interval() for r in isolate_roots(eulerian_unipoly(n))]
    assert len(roots) == n
    for k in range(4):
        total = DyadicInterval.point(0)
        for r in roots:
            term = DyadicInterval.point(1)
            inv = (-r).reciprocal()
            for _ in range(k):
                term = term * inv
            total = total + term
        L = lform_eulerian_uni(n, k)
        assert total.contains(L)
        assert total.width <= Fraction(1, 2 ** 64) * max(1, abs(L))


@pytest.mark.parametrize("n", range(1, 9))
def test_diagonal_sums_give_univariate_values(n):
    variables = range(2, n + 2)
    for k in range(1, 4):
        weighted = 0
        for mono in monomials_upto3(variables):
            if len(mono) == k:
                mult = factorial(k) // prod(factorial(c) for c in Counter(mono).values())
                weighted += mult * lform_eulerian_multi(n, mono)
        assert weighted == lform_eulerian_uni(n, k)


coeff = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@given(st.lists(coeff, min_size=3, max_size=3), st.lists(coeff, min_size=3, max_size=3),
       st.lists(coeff, min_size=6, max_size=6), st.integers(3, 9))
def test_closed_forms_match_series_on_arbitrary_truncations(linear, pairs, cubics, deg):
    v = (1, 2, 3)
    table = {(1,): linear[0], (2,): linear[1], (3,): linear[2],
             (1, 1): pairs[0], (1, 2): pairs[1], (2, 3): pairs[2],
             (1, 1, 1): cubics[0], (1, 1, 2): cubics[1], (1, 2, 2): cubics[2],
             (1, 2, 3): cubics[3], (2, 2, 3): cubics[4], (3, 3, 3): cubics[5]}
    t = Trunc3Polynomial(v, table, deg)
    for mono in monomials_upto3(v):
        assert lform_closed(t, mono) == lform_series(t, mono), mono


def test_truncation_validation():
    with pytest.raises(ValueError):
        Trunc3Polynomial((2,), {(): 2}, 1)
    with pytest.raises(ValueError):
        Trunc3Polynomial((2,), {(3,): 1}, 1)
    t = Trunc3Polynomial.from_coefficients([2, 8, 2])
    assert t.deg == 2 and t.coefficient(1) == 4
