"""Closed-form descent-top combinatorics and Eulerian numbers.

Conventions: permutations of ``m`` symbols; the Eulerian index ``n`` refers to
S_{n+1}, so ``r_count(n, X)`` counts permutations of ``[n+1]`` whose
descent-top set is exactly ``X`` (a subset of ``{2, ..., n+1}``).  Everything
is computed with Python integers.

``p_exact`` counts permutations with *exactly* ``s`` descents whose top is in
``X`` (descents with tops outside ``X`` are unconstrained).  A brute-force
check at ``m=3, X={2,3}, s=1`` gives 4 under this reading and 5 under the
"at least" reading; the alternating-sum expressions produce 4.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterable

STRATEGIES = ("closed_form", "inclusion_exclusion_alpha", "inclusion_exclusion_pfull", "brute_force")


class UnsupportedQuery(ValueError):
    """The chosen strategy does not cover this input."""


@dataclass(frozen=True)
class DescentQuery:
    m: int
    X: tuple
    s: int

    def __post_init__(self):
        X = tuple(sorted(set(self.X)))
        if self.m < 1:
            raise ValueError("m must be positive")
        if any(x < 1 or x > self.m for x in X):
            raise ValueError(f"X={X} is not a subset of [1..{self.m}]")
        if self.s < 0:
            raise ValueError("s must be nonnegative")
        object.__setattr__(self, "X", X)

    @property
    def complement_size(self) -> int:
        return self.m - len(self.X)

    def tail_outside(self, j: int) -> int:
        """How many symbols above ``j`` lie outside X."""
        return sum(1 for v in range(j + 1, self.m + 1) if v not in self.X)

    def head_outside(self, j: int) -> int:
        """How many symbols below ``j`` lie outside X."""
        return sum(1 for v in range(1, j) if v not in self.X)


def p_exact(m: int, X: Iterable[int], s: int, expression: str = "first") -> int:
    """Permutations of S_m with exactly ``s`` descents whose top lies in ``X``."""
    q = DescentQuery(m, tuple(X), s)
    k = len(q.X)
    if s > k:
        return 0
    free = q.complement_size
    if expression == "first":
        tails = [q.tail_outside(x) for x in q.X]
        total = sum(
            (-1) ** (s - r) * comb(free + r, r) * comb(m + 1, s - r) * prod(1 + r + t for t in tails)
            for r in range(s + 1)
        )
    elif expression == "second":
        heads = [q.head_outside(x) for x in q.X]
        total = sum(
            (-1) ** (k - s - r) * comb(free + r, r) * comb(m + 1, k - s - r) * prod(r + h for h in heads)
            for r in range(k - s + 1)
        )
    else:
        raise ValueError(f"unknown expression {expression!r}")
    return factorial(free) * total


def p_full(m: int, X: Iterable[int]) -> int:
    """Permutations of S_m whose descent-top set contains ``X``."""
    X = sorted(set(X))
    if any(x < 1 or x > m for x in X):
        raise ValueError(f"X={X} is not a subset of [1..{m}]")
    return factorial(m - len(X)) * prod(x - i for i, x in enumerate(X, start=1))


def alpha_tuple(X: Iterable[int]) -> tuple:
    """Consecutive gaps (x1 - 1, x2 - x1, ...)."""
    X = sorted(X)
    return tuple(b - a for a, b in zip([1] + X, X))


def beta_hat_factorial(t: Iterable[int]) -> int:
    """(k+1)^t1 * k^t2 * ... * 2^tk for a k-tuple t."""
    t = tuple(t)
    if any(e < 0 for e in t):
        raise ValueError("exponents must be nonnegative")
    k = len(t)
    return prod((k + 2 - i) ** e for i, e in enumerate(t, start=1))


def _check_top_set(n: int, X) -> tuple:
    X = tuple(sorted(set(X)))
    if n < 1:
        raise ValueError("n must be at least 1")
    if any(x < 2 or x > n + 1 for x in X):
        raise ValueError(f"X={X} is not a subset of [2..{n + 1}]")
    return X


def _closed_form(X: tuple) -> int:
    if len(X) == 0:
        return 1
    if len(X) == 1:
        (a,) = X
        return 2 ** (a - 1) - 1
    if len(X) == 2:
        a, b = X
        return 3 ** (a - 1) * 2 ** (b - a) - (2 ** (a - 1) + 2 ** (b - 1)) + 1
    if len(X) == 3:
        a, b, c = X
        pairs = 3 ** (a - 1) * 2 ** (b - a) + 3 ** (b - 1) * 2 ** (c - b) + 3 ** (a - 1) * 2 ** (c - a)
        singles = 2 ** (a - 1) + 2 ** (b - 1) + 2 ** (c - 1)
        return 4 ** (a - 1) * 3 ** (b - a) * 2 ** (c - b) - pairs + singles - 1
    raise UnsupportedQuery("closed form only covers |X| <= 3")


def _subsets(items):
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def r_count(n: int, X: Iterable[int], strategy: str = "closed_form", *, cap: int | None = None) -> int:
    """Permutations of S_{n+1} whose descent-top set is exactly ``X``."""
    X = _check_top_set(n, X)
    if strategy == "closed_form":
        return _closed_form(X)
    if strategy == "inclusion_exclusion_alpha":
        return sum((-1) ** (len(X) - len(J)) * beta_hat_factorial(alpha_tuple(J)) for J in _subsets(X))
    if strategy == "inclusion_exclusion_pfull":
        rest = [v for v in range(1, n + 2) if v not in X]
        return sum((-1) ** len(S) * p_full(n + 1, X + S) for S in _subsets(rest))
    if strategy == "brute_force":
        from .perms import eulerian_bruteforce

        return eulerian_bruteforce(n, cap=cap).get(frozenset(X), 0)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple:
    """Coefficients of A_n built by the derivative recurrence; A_0 = 1."""
    if n == 0:
        return (1,)
    prev = _eulerian_row(n - 1)
    return tuple(
        (k + 1) * (prev[k] if k < len(prev) else 0) + (n - k + 1) * (prev[k - 1] if k >= 1 else 0)
        for k in range(n + 1)
    )


def eulerian_number(n: int, k: int, method: str = "recurrence") -> int:
    """E(n+1, k): permutations of [n+1] with ``k`` descents."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    if method == "recurrence":
        return _eulerian_row(n)[k]
    if method == "expansion":
        return sum((-1) ** i * comb(n + 2, i) * (k + 1 - i) ** (n + 1) for i in range(k + 1))
    raise ValueError(f"unknown method {method!r}")


def eulerian_poly(n: int) -> tuple:
    """(E(n+1,0), ..., E(n+1,n)), constant term first."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return _eulerian_row(n)
