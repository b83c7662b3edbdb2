"""Acceptance criteria, one check per criterion.

Run ``pytest tests/test_acceptance.py -s`` (or ``python tests/test_acceptance.py``)
to see one PASS/FAIL line per criterion.
"""
from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations

import pytest

from eulerian_rcs.bounds import (b11_bound, colucci_bound, compare_values, crossover_index, is_status,
                                 laguerre_upper, mult_det_bound, mult_v_bound, optimal_y, ratio_row, un_bound,
                                 vector_bound)
from eulerian_rcs.counting import STRATEGIES, eulerian_number, p_exact, r_count
from eulerian_rcs.exact import Ordering, RadicalExpr
from eulerian_rcs.lform import (lform_eulerian_multi, lform_eulerian_uni, lform_series, monomials_upto3,
                                trunc3_eulerian_uni)
from eulerian_rcs.oracle import abs_extreme_root, eulerian_unipoly, quadratic_roots
from eulerian_rcs.pencil import eulerian_pencil, psd, quadratic_form, univariate_pencil
from eulerian_rcs.perms import bruteforce_exact_count, eulerian_bruteforce, rz_direction_check
from eulerian_rcs.checks import random_directions

UN_RATIO_30 = Fraction(999866029560496, 10 ** 15)
SCALED_DIFF_40 = Fraction(923048603952747, 10 ** 15)
CROSSOVER = 5
RZ_SEED = 20240601


def _bruteforce_trunc(n):
    from eulerian_rcs.lform import Trunc3Polynomial

    poly = eulerian_bruteforce(n)
    table = {tuple(sorted(t)): c for t, c in poly.items() if 0 < len(t) <= 3}
    return Trunc3Polynomial(tuple(range(2, n + 2)), table, n)


def criterion_1():
    start = time.perf_counter()
    for n in range(1, 9):
        layers = [0] * 4
        for k in range(4):
            for X in combinations(range(2, n + 2), k):
                values = {s: r_count(n, X, s) for s in STRATEGIES}
                if len(set(values.values())) != 1:
                    return False, f"strategies disagree at n={n}, X={X}: {values}"
                layers[k] += values["brute_force"]
        for k in range(min(n, 3) + 1):
            if layers[k] != eulerian_number(n, k):
                return False, f"layer sum n={n}, k={k}"
    elapsed = time.perf_counter() - start
    return elapsed < 60, f"n<=8 all strategies agree, layer sums ok ({elapsed:.1f}s)"


def criterion_2():
    value = p_exact(3, {2, 3}, 1)
    exactly = bruteforce_exact_count(3, {2, 3}, 1)
    at_least = exactly + bruteforce_exact_count(3, {2, 3}, 2)
    if not (value == 4 == exactly and at_least == 5 and value != at_least):
        return False, f"p_exact(3,{{2,3}},1)={value}, exactly={exactly}, at_least={at_least}"
    for m in range(1, 10):
        for k in range(4):
            for X in combinations(range(1, m + 1), k):
                for s in range(k + 1):
                    if p_exact(m, X, s, "first") != p_exact(m, X, s, "second"):
                        return False, f"expressions differ at m={m}, X={X}, s={s}"
    return True, "p_exact(3,{2,3},1)=4 (at-least count 5); expressions agree for m<=9"


def criterion_3():
    for n in range(1, 9):
        t = _bruteforce_trunc(n)
        for mono in monomials_upto3(t.variables):
            if lform_eulerian_multi(n, mono) != lform_series(t, mono):
                return False, f"multivariate mismatch n={n}, {mono}"
    for n in range(1, 26):
        t = trunc3_eulerian_uni(n)
        for k in range(4):
            if lform_eulerian_uni(n, k) != lform_series(t, (1,) * k):
                return False, f"univariate mismatch n={n}, k={k}"
    t2 = _bruteforce_trunc(2)
    if not (lform_series(t2, (2, 2, 3)) == 2 == lform_eulerian_multi(2, (2, 2, 3))):
        return False, "x2^2 x3 sign regression"
    return True, "multi n<=8, uni n<=25, L(x2^2 x3)=2 at n=2"


def criterion_4():
    q1 = min(quadratic_roots(eulerian_unipoly(2)), key=lambda r: r.interval(64).lo)
    oracle = -q1
    un = un_bound(2)
    md = mult_det_bound(2)
    mv = mult_v_bound(2)
    y = optimal_y(2).y_star
    target = RadicalExpr(2, 1, 3)
    ok = (isinstance(un, RadicalExpr) and un == oracle == target and isinstance(md, RadicalExpr) and md == target
          and mv == RadicalExpr(2, 1, 2) and y == RadicalExpr(1, -1, 2))
    return ok, f"un(2)={un}, mult_det(2)={md}, mult_v(2)={mv}, y*={y}"


def criterion_5():
    for n in range(1, 61):
        b = vector_bound(univariate_pencil(n).diagonal(), (1, 0))
        if b != Fraction(2 ** (n + 1) - n - 2, n) or b != colucci_bound(n):
            return False, f"n={n}: {b}"
    return True, "corner vector reproduces (2^(n+1)-n-2)/n for n<=60"


def criterion_6():
    start = time.perf_counter()
    for n in range(2, 31):
        oracle = abs_extreme_root(n)
        if oracle.width > Fraction(1, 2 ** 64):
            return False, f"enclosure too wide at n={n}"
        col, b11, un, lag = colucci_bound(n), b11_bound(n), un_bound(n), laguerre_upper(n)
        steps = [
            compare_values(col, b11) == Ordering.LESS,
            compare_values(b11, un) != Ordering.GREATER,
            compare_values(un, oracle) != Ordering.GREATER,
            compare_values(oracle, lag) != Ordering.GREATER,
        ]
        if not all(steps):
            return False, f"chain broken at n={n}: {steps}"
    elapsed = time.perf_counter() - start
    return elapsed < 300, f"colucci < b11 <= un <= |q1| <= I(n) for 2<=n<=30 ({elapsed:.1f}s)"


def criterion_7():
    samples = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(7))
    for n in range(1, 21):
        multi, uni = eulerian_pencil(n).diagonal(), univariate_pencil(n).diagonal()
        for a in samples:
            v = (a,) + (1,) * n
            lhs = (quadratic_form(multi.M0, v), quadratic_form(multi.MSigma, v))
            rhs = (quadratic_form(uni.M0, (a, 1)), quadratic_form(uni.MSigma, (a, 1)))
            if lhs != rhs:
                return False, f"n={n}, a={a}: {lhs} vs {rhs}"
    return True, "compression identity for n<=20, 5 values of a"


def criterion_8():
    row = ratio_row(30)
    iv = row.un_ratio
    bits_ok = iv.width <= iv.lo / 2 ** 40
    in_range = Fraction(99, 100) <= iv.lo and iv.hi <= 1
    pinned = abs(iv.midpoint - UN_RATIO_30) < Fraction(1, 10 ** 14)
    return bits_ok and in_range and pinned, f"un(30)/2^31 = {float(iv.midpoint):.15f} (pin {float(UN_RATIO_30)})"


def criterion_9():
    d30, d40 = ratio_row(30).scaled_diff, ratio_row(40).scaled_diff
    positive = d30.lo > 0 and d40.lo > 0
    window = Fraction(4, 5) <= d40.lo and d40.hi <= Fraction(6, 5)
    pinned = abs(d40.midpoint - SCALED_DIFF_40) < Fraction(1, 10 ** 14)
    n0_first, n0_second = crossover_index(40), crossover_index(40)
    stable = n0_first == n0_second == CROSSOVER
    below = compare_values(mult_v_bound(2), un_bound(2)) == Ordering.LESS
    ok = positive and window and pinned and stable and below
    return ok, (f"scaled_diff(30)={float(d30.midpoint):.6f}, scaled_diff(40)={float(d40.midpoint):.6f}, "
                f"n0={n0_first}")


def criterion_10():
    bad = [n for n in range(1, 41) if not psd(eulerian_pencil(n).constant)]
    return not bad, "M0 PSD for n<=40" if not bad else f"not PSD at {bad}"


def criterion_11():
    for n in range(1, 7):
        for direction in random_directions(n, 100, RZ_SEED):
            verdict = rz_direction_check(n, direction)
            if not verdict.real_rooted:
                return False, f"n={n}, direction={direction}"
    return True, f"600 seeded directions (seed {RZ_SEED}) real-rooted"


def criterion_12():
    for n in range(2, 9):
        md, mv, oracle = mult_det_bound(n), mult_v_bound(n), abs_extreme_root(n)
        if is_status(mv) or compare_values(md, mv) == Ordering.LESS:
            return False, f"mult_det < mult_v at n={n}"
        if compare_values(md, oracle) == Ordering.GREATER:
            return False, f"mult_det > |q1| at n={n}"
    return True, "mult_v <= mult_det <= |q1| for 2<=n<=8"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


@pytest.mark.parametrize("index", range(1, len(CRITERIA) + 1))
def test_criterion(index):
    ok, detail = CRITERIA[index - 1]()
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {index}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    for i, check in enumerate(CRITERIA, start=1):
        ok, detail = check()
        print(f"{'PASS' if ok else 'FAIL'} criterion {i}: {detail}")
