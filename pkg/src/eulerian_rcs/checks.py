"""Property suites shared by ``eulerian-rcs verify`` and the test-suite."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .bounds import (DEFAULT_MULT_DET_CAP, b11_bound, colucci_bound, compare_values, is_status, laguerre_upper,
                     mult_det_bound, mult_v_bound, un_bound)
from .counting import STRATEGIES, eulerian_number, p_exact, r_count
from .exact import Ordering
from .lform import (lform_eulerian_multi, lform_eulerian_uni, lform_series, monomials_upto3, trunc3_eulerian,
                    trunc3_eulerian_uni)
from .oracle import abs_extreme_root
from .pencil import eulerian_pencil, psd, quadratic_form, univariate_pencil
from .perms import DEFAULT_BRUTE_FORCE_CAP, bruteforce_exact_count, rz_direction_check

COMPRESSION_SAMPLES = (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(7))


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


def _result(name, failures, checked) -> SuiteResult:
    if failures:
        return SuiteResult(name, False, f"{len(failures)} of {checked} failed; first: {failures[0]}")
    return SuiteResult(name, True, f"{checked} checks")


def combinatorics_suite(n_max: int, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> SuiteResult:
    failures, checked = [], 0
    top = min(n_max, cap)
    for n in range(1, top + 1):
        tops = range(2, n + 2)
        layers = {k: 0 for k in range(4)}
        for size in range(4):
            for X in combinations(tops, size):
                values = {s: r_count(n, X, s, cap=cap) for s in STRATEGIES}
                checked += 1
                if len(set(values.values())) != 1:
                    failures.append(("r_count", n, X, values))
                layers[size] += values["closed_form"]
        for k, total in layers.items():
            checked += 1
            if k <= n and total != eulerian_number(n, k):
                failures.append(("layer", n, k, total))
    for m in range(1, min(top + 1, 9) + 1):
        for size in range(4):
            for X in combinations(range(1, m + 1), size):
                for s in range(size + 1):
                    checked += 1
                    first, second = p_exact(m, X, s, "first"), p_exact(m, X, s, "second")
                    if not first == second == bruteforce_exact_count(m, X, s, cap=cap):
                        failures.append(("p_exact", m, X, s))
    return _result("combinatorics", failures, checked)


def lform_suite(n_max: int) -> SuiteResult:
    failures, checked = [], 0
    for n in range(1, min(n_max, 8) + 1):
        t = trunc3_eulerian(n)
        for mono in monomials_upto3(t.variables):
            checked += 1
            if lform_series(t, mono) != lform_eulerian_multi(n, mono):
                failures.append((n, mono))
    for n in range(1, n_max + 1):
        t = trunc3_eulerian_uni(n)
        for k in range(4):
            checked += 1
            if lform_series(t, (1,) * k) != lform_eulerian_uni(n, k):
                failures.append((n, "x^%d" % k))
    return _result("lform", failures, checked)


def psd_suite(n_max: int) -> SuiteResult:
    failures = [n for n in range(1, n_max + 1) if not psd(eulerian_pencil(n).constant)]
    return _result("psd_origin", failures, n_max)


def chain_suite(n_max: int) -> SuiteResult:
    """colucci < b11 <= un <= |q_1| <= I(n)."""
    failures, checked = [], 0
    for n in range(2, n_max + 1):
        oracle = abs_extreme_root(n)
        chain = [colucci_bound(n), b11_bound(n), un_bound(n), oracle, laguerre_upper(n)]
        strict = [True, False, False, False]
        for (lo, hi, must_be_strict) in zip(chain, chain[1:], strict):
            checked += 1
            order = compare_values(lo, hi)
            if order == Ordering.GREATER or (must_be_strict and order == Ordering.EQUAL):
                failures.append((n, lo, hi))
    return _result("bound_chain", failures, checked)


def compression_suite(n_max: int, samples=COMPRESSION_SAMPLES) -> SuiteResult:
    failures, checked = [], 0
    for n in range(1, n_max + 1):
        multi = eulerian_pencil(n).diagonal()
        uni = univariate_pencil(n).diagonal()
        for a in samples:
            checked += 1
            v = (a,) + (1,) * n
            lhs = (quadratic_form(multi.M0, v), quadratic_form(multi.MSigma, v))
            rhs = (quadratic_form(uni.M0, (a, 1)), quadratic_form(uni.MSigma, (a, 1)))
            if lhs != rhs:
                failures.append((n, a))
    return _result("compression", failures, checked)


def random_directions(n: int, count: int, seed: int) -> list[tuple]:
    """Seeded nonzero rational directions with small numerators and denominators."""
    rng = np.random.default_rng([seed, n])
    out = []
    while len(out) < count:
        nums = rng.integers(-9, 10, size=n)
        dens = rng.integers(1, 10, size=n)
        if not nums.any():
            continue
        out.append(tuple(Fraction(int(a), int(b)) for a, b in zip(nums, dens)))
    return out


def rz_suite(n_max: int, seed: int = 0, count: int = 100, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> SuiteResult:
    failures, checked = [], 0
    for n in range(1, min(n_max, 6, cap) + 1):
        for direction in random_directions(n, count, seed):
            checked += 1
            verdict = rz_direction_check(n, direction, cap=cap)
            if not verdict.real_rooted:
                failures.append((n, direction))
    return _result("rz_sampling", failures, checked)


def determinant_suite(n_max: int, det_cap: int = DEFAULT_MULT_DET_CAP) -> SuiteResult:
    failures, checked = [], 0
    for n in range(2, min(n_max, det_cap) + 1):
        md, mv = mult_det_bound(n, det_cap), mult_v_bound(n)
        checked += 1
        if is_status(mv) or compare_values(md, mv) == Ordering.LESS:
            failures.append((n, "below mult_v"))
        if compare_values(md, abs_extreme_root(n)) == Ordering.GREATER:
            failures.append((n, "above oracle"))
    return _result("determinant_dominance", failures, checked)


def run_all(n_max: int, *, seed: int = 0, cap: int = DEFAULT_BRUTE_FORCE_CAP,
            det_cap: int = DEFAULT_MULT_DET_CAP) -> list[SuiteResult]:
    return [
        combinatorics_suite(n_max, cap),
        lform_suite(n_max),
        psd_suite(n_max),
        chain_suite(n_max),
        compression_suite(n_max),
        rz_suite(n_max, seed, cap=cap),
        determinant_suite(n_max, det_cap),
    ]
