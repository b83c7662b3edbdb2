"""Brute-force descent statistics over the symmetric group.

Every permutation of ``[m]`` is reduced to a bit key: bit ``v-1`` is set when
``v`` is a descent top and, if ascents are tracked, bit ``m+v-1`` when ``v`` is
an ascent top.  A histogram of these keys over all of S_m is the ground truth
for every counting identity in the package.  The hot loop is a numba kernel
that streams permutations in lexicographic order; a chunked numpy version
(one chunk per leading symbol) is used when numba is unavailable or disabled.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from ._accel import HAVE_NUMBA, njit
from .exact import as_rational

DEFAULT_BRUTE_FORCE_CAP = int(os.environ.get("EULERIAN_RCS_BRUTE_FORCE_CAP", "8"))


class BruteForceCapError(ValueError):
    """Requested enumeration is above the configured brute-force cap."""


@dataclass(frozen=True)
class DescentStats:
    descent_tops: frozenset
    ascent_tops: frozenset

    @property
    def des(self) -> int:
        return len(self.descent_tops)


def _check_permutation(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)) or not p:
        raise ValueError(f"{tuple(p)} is not a permutation of [1..{len(p)}]")


def descent_stats(p: Sequence[int]) -> DescentStats:
    _check_permutation(p)
    dt = {p[i] for i in range(len(p) - 1) if p[i] > p[i + 1]}
    at = {p[i + 1] for i in range(len(p) - 1) if p[i] < p[i + 1]}
    return DescentStats(frozenset(dt), frozenset(at))


def count_x_descents(p: Sequence[int], X: Iterable[int]) -> int:
    """Number of descents of ``p`` whose top lies in ``X`` (bottom unrestricted)."""
    X = set(X)
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1] and p[i] in X)


# -- histogram kernels ----------------------------------------------------------------

@njit(cache=True)
def _histogram_numba(m, with_ascents):
    perm = np.arange(1, m + 1)
    nbits = 2 * m if with_ascents else m
    hist = np.zeros(1 << nbits, dtype=np.int64)
    while True:
        key = 0
        for i in range(m - 1):
            if perm[i] > perm[i + 1]:
                key |= 1 << (perm[i] - 1)
            elif with_ascents:
                key |= 1 << (m + perm[i + 1] - 1)
        hist[key] += 1
        # next permutation in lexicographic order
        i = m - 2
        while i >= 0 and perm[i] > perm[i + 1]:
            i -= 1
        if i < 0:
            break
        j = m - 1
        while perm[j] < perm[i]:
            j -= 1
        perm[i], perm[j] = perm[j], perm[i]
        lo = i + 1
        hi = m - 1
        while lo < hi:
            perm[lo], perm[hi] = perm[hi], perm[lo]
            lo += 1
            hi -= 1
    return hist


def _all_permutations(symbols: np.ndarray) -> np.ndarray:
    """Rows are all orderings of ``symbols``; built by column insertion."""
    k = len(symbols)
    out = np.zeros((1, 0), dtype=np.int16)
    for c in range(k):
        # insert symbol c at every position of every existing row
        rows = out.shape[0]
        width = out.shape[1]
        grown = np.empty((rows * (width + 1), width + 1), dtype=np.int16)
        for pos in range(width + 1):
            block = grown[pos * rows:(pos + 1) * rows]
            block[:, :pos] = out[:, :pos]
            block[:, pos] = c
            block[:, pos + 1:] = out[:, pos:]
        out = grown
    return symbols[out]


def _histogram_numpy(m: int, with_ascents: bool) -> np.ndarray:
    nbits = 2 * m if with_ascents else m
    hist = np.zeros(1 << nbits, dtype=np.int64)
    weights = np.int64(1) << np.arange(2 * m + 1, dtype=np.int64)
    for first in range(1, m + 1):
        rest = np.array([v for v in range(1, m + 1) if v != first], dtype=np.int64)
        tails = _all_permutations(rest) if m > 1 else np.zeros((1, 0), dtype=np.int64)
        block = np.empty((tails.shape[0], m), dtype=np.int64)
        block[:, 0] = first
        block[:, 1:] = tails
        left, right = block[:, :-1], block[:, 1:]
        desc = left > right
        keys = np.where(desc, weights[left - 1], 0).sum(axis=1)
        if with_ascents:
            keys = keys + np.where(~desc, weights[m + right - 1], 0).sum(axis=1)
        hist += np.bincount(keys, minlength=hist.size)
    return hist


@lru_cache(maxsize=32)
def _cached_histogram(m: int, with_ascents: bool, use_numba: bool) -> np.ndarray:
    if use_numba:
        hist = _histogram_numba(m, with_ascents)
    else:
        hist = _histogram_numpy(m, with_ascents)
    hist.setflags(write=False)
    return hist


def descent_histogram(m: int, with_ascents: bool = False, *, cap: int | None = None,
                      use_numba: bool | None = None) -> np.ndarray:
    """Histogram of descent-top (and ascent-top) bit keys over all of S_m.

    ``cap`` bounds the Eulerian index ``n = m - 1``.  The returned array is
    read-only and shared between callers.
    """
    cap = DEFAULT_BRUTE_FORCE_CAP if cap is None else cap
    if m < 1:
        raise ValueError("m must be at least 1")
    if m - 1 > cap:
        raise BruteForceCapError(f"S_{m} enumeration exceeds brute-force cap n <= {cap}")
    if use_numba is None:
        use_numba = HAVE_NUMBA
    return _cached_histogram(m, bool(with_ascents), bool(use_numba and HAVE_NUMBA))


def _key_to_set(key: int, offset: int, m: int) -> frozenset:
    return frozenset(v for v in range(1, m + 1) if key >> (offset + v - 1) & 1)


def eulerian_bruteforce(n: int, include_ascents: bool = False, *, cap: int | None = None) -> dict:
    """Multivariate Eulerian polynomial from enumeration of S_{n+1}.

    Without ascents the result maps a frozenset of descent tops (a squarefree
    monomial in x_2..x_{n+1}) to its coefficient.  With ascents the keys are
    pairs ``(descent_tops, ascent_tops)`` for monomials in x and y.
    """
    m = n + 1
    hist = descent_histogram(m, include_ascents, cap=cap)
    poly = {}
    for key in np.flatnonzero(hist):
        key = int(key)
        count = int(hist[key])
        dt = _key_to_set(key, 0, m)
        if include_ascents:
            poly[(dt, _key_to_set(key, m, m))] = count
        else:
            poly[dt] = count
    return poly


def bruteforce_exact_count(m: int, X: Iterable[int], s: int, *, cap: int | None = None) -> int:
    """Permutations of S_m with exactly ``s`` descents whose top lies in ``X``."""
    mask = sum(1 << (x - 1) for x in set(X) if 1 <= x <= m)
    hist = descent_histogram(m, cap=cap)
    keys = np.flatnonzero(hist)
    hits = [int(hist[k]) for k in keys if bin(int(k) & mask).count("1") == s]
    return sum(hits)


def bruteforce_dt_subset_count(m: int, X: Iterable[int], *, cap: int | None = None) -> int:
    """Permutations of S_m whose descent-top set is contained in ``X``."""
    mask = sum(1 << (x - 1) for x in set(X) if 1 <= x <= m)
    hist = descent_histogram(m, cap=cap)
    keys = np.flatnonzero(hist)
    return sum(int(hist[k]) for k in keys if int(k) & ~mask == 0)


def bruteforce_dt_superset_count(m: int, X: Iterable[int], *, cap: int | None = None) -> int:
    """Permutations of S_m whose descent-top set contains ``X``."""
    mask = sum(1 << (x - 1) for x in set(X) if 1 <= x <= m)
    if any(x < 1 or x > m for x in X):
        return 0
    hist = descent_histogram(m, cap=cap)
    keys = np.flatnonzero(hist)
    return sum(int(hist[k]) for k in keys if int(k) & mask == mask)


def iter_permutations(m: int):
    """Streaming generator over S_m in lexicographic order (pure Python)."""
    return permutations(range(1, m + 1))


def restrict_to_line(n: int, direction: Sequence, *, cap: int | None = None) -> list[Fraction]:
    """Coefficients (constant first) of t -> A_n(t*direction, 1).

    ``direction`` gives the entries for x_2..x_{n+1}.
    """
    direction = [as_rational(c) for c in direction]
    if len(direction) != n:
        raise ValueError(f"direction must have {n} entries (x_2..x_{n + 1})")
    poly = eulerian_bruteforce(n, cap=cap)
    coeffs = [Fraction(0)] * (n + 1)
    for tops, count in poly.items():
        term = Fraction(count)
        for v in tops:
            term *= direction[v - 2]
        coeffs[len(tops)] += term
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class RZVerdict:
    n: int
    direction: tuple
    coefficients: tuple
    degree: int
    real_roots: int

    @property
    def real_rooted(self) -> bool:
        return self.real_roots == self.degree


def rz_direction_check(n: int, direction: Sequence, root_oracle=None, *, cap: int | None = None) -> RZVerdict:
    """Restrict A_n(x, 1) to the line t*direction and count its real roots.

    ``root_oracle(coeffs) -> (distinct_real_roots, squarefree_degree)``
    defaults to the Sturm-based counter of :mod:`eulerian_rcs.oracle`.
    """
    coeffs = restrict_to_line(n, direction, cap=cap)
    if all(c == 0 for c in coeffs):
        raise RuntimeError("restriction vanished identically")
    if root_oracle is None:
        from .oracle import real_root_profile

        root_oracle = real_root_profile
    real, degree = root_oracle(coeffs)
    return RZVerdict(n, tuple(as_rational(c) for c in direction), tuple(coeffs), degree, real)
