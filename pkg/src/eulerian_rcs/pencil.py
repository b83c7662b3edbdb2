"""Linear matrix pencils built from the L-form, exact PSD tests and determinants."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .exact import as_rational, rational_str
from .lform import (Trunc3Polynomial, lform_eulerian_multi, lform_eulerian_uni, lform_series,
                    trunc3_eulerian)
from .oracle import UniPoly

DEFAULT_DET_CAP = 12

Matrix = tuple  # tuple of row tuples of Fraction


class DeterminantCapError(ValueError):
    """Matrix size exceeds the determinant cap."""


def _freeze(rows) -> Matrix:
    return tuple(tuple(as_rational(x) for x in row) for row in rows)


def _check_symmetric(M: Matrix) -> None:
    size = len(M)
    if any(len(row) != size for row in M):
        raise ValueError("matrix is not square")
    for i in range(size):
        for j in range(i + 1, size):
            if M[i][j] != M[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i}, {j})")


def mat_add(A: Matrix, B: Matrix, scale=1) -> Matrix:
    scale = as_rational(scale)
    return tuple(tuple(a + scale * b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def quadratic_form(M: Matrix, v: Sequence) -> Fraction:
    v = [as_rational(x) for x in v]
    if len(v) != len(M):
        raise ValueError(f"vector length {len(v)} does not match matrix size {len(M)}")
    return sum((v[i] * M[i][j] * v[j] for i in range(len(v)) for j in range(len(v)) if M[i][j]),
               Fraction(0))


def zero_matrix(size: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(size)) for _ in range(size))


@dataclass(frozen=True)
class DiagonalPencil:
    """M0 + t * MSigma: the pencil with every variable set to t."""

    M0: Matrix
    MSigma: Matrix

    @property
    def size(self) -> int:
        return len(self.M0)

    def at(self, t) -> Matrix:
        return mat_add(self.M0, self.MSigma, t)


@dataclass(frozen=True)
class Pencil:
    """A_0 + sum_k x_k A_k with rows labelled by monomials 1, x_i, ..."""

    n: int
    labels: tuple
    constant: Matrix
    coeffs: Mapping  # tag -> Matrix, insertion ordered

    @property
    def size(self) -> int:
        return len(self.constant)

    @property
    def tags(self) -> tuple:
        return tuple(self.coeffs)

    def check(self) -> None:
        _check_symmetric(self.constant)
        for M in self.coeffs.values():
            if len(M) != self.size:
                raise ValueError("coefficient matrices differ in size")
            _check_symmetric(M)

    def diagonal(self) -> DiagonalPencil:
        total = zero_matrix(self.size)
        for M in self.coeffs.values():
            total = mat_add(total, M)
        return DiagonalPencil(self.constant, total)

    def evaluate(self, point: Sequence) -> Matrix:
        point = [as_rational(x) for x in point]
        if len(point) != len(self.coeffs):
            raise ValueError(f"point has {len(point)} entries, pencil has {len(self.coeffs)} variables")
        M = self.constant
        for x, A in zip(point, self.coeffs.values()):
            if x:
                M = mat_add(M, A, x)
        return M

    def membership(self, point: Sequence) -> bool:
        return psd(self.evaluate(point))

    def to_json_obj(self) -> dict:
        def enc(M):
            return [[rational_str(x) for x in row] for row in M]

        return {
            "n": self.n,
            "labels": list(self.labels),
            "A0": enc(self.constant),
            "coeffs": {tag: enc(M) for tag, M in self.coeffs.items()},
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    @classmethod
    def from_json(cls, text) -> "Pencil":
        obj = json.loads(text) if isinstance(text, str) else text
        return cls(
            n=int(obj["n"]),
            labels=tuple(obj["labels"]),
            constant=_freeze(obj["A0"]),
            coeffs={tag: _freeze(M) for tag, M in obj["coeffs"].items()},
        )


def diagonal(p: Pencil) -> DiagonalPencil:
    return p.diagonal()


def evaluate(p: Pencil, point: Sequence) -> Matrix:
    return p.evaluate(point)


def membership(p: Pencil, point: Sequence) -> bool:
    return p.membership(point)


def _assemble(n: int, variables: Sequence[int], names: Callable[[int], str],
              L: Callable[[tuple], Fraction]) -> Pencil:
    rows = [()] + [(v,) for v in variables]
    labels = ("1",) + tuple(names(v) for v in variables)

    def moment(shift: tuple) -> Matrix:
        out = []
        for u in rows:
            out.append(tuple(L(shift + u + w) for w in rows))
        return tuple(out)

    return Pencil(n, labels, moment(()), {names(v): moment((v,)) for v in variables})


def build_pencil(t: Trunc3Polynomial) -> Pencil:
    """Pencil of the L-form of ``t``; variables whose L-values all vanish still get rows."""
    return _assemble(t.deg, t.variables, t.name, lambda m: lform_series(t, m))


def eulerian_pencil(n: int, *, ghost: bool = False, method: str = "closed") -> Pencil:
    """Pencil of A_n(x, 1) on rows 1, x_2, ..., x_{n+1}.

    ``ghost=True`` also emits the identically zero row, column and
    coefficient matrix of x_1.  ``method='series'`` goes through the
    reference L-form instead of the closed forms.
    """
    if method == "series":
        return build_pencil(trunc3_eulerian(n, ghost=ghost))
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    variables = tuple(range(1 if ghost else 2, n + 2))
    cache: dict = {}

    def L(mono):
        mono = tuple(sorted(mono))
        if 1 in mono:
            return Fraction(0)
        if mono not in cache:
            cache[mono] = lform_eulerian_multi(n, mono)
        return cache[mono]

    return _assemble(n, variables, lambda v: f"x{v}", L)


def univariate_pencil(n: int) -> Pencil:
    """2x2 pencil of the univariate A_n (rows 1, x)."""
    L = [lform_eulerian_uni(n, k) for k in range(4)]
    A0 = ((L[0], L[1]), (L[1], L[2]))
    A1 = ((L[1], L[2]), (L[2], L[3]))
    return Pencil(n, ("1", "x"), A0, {"x": A1})


def psd(M) -> bool:
    """Exact positive-semidefiniteness by symmetric elimination."""
    M = [list(row) for row in _freeze(M)]
    _check_symmetric(tuple(tuple(r) for r in M))
    size = len(M)
    for k in range(size):
        d = M[k][k]
        if d < 0:
            return False
        if d == 0:
            if any(M[k][j] for j in range(k + 1, size)):
                return False
            continue
        for i in range(k + 1, size):
            f = M[i][k]
            if not f:
                continue
            ratio = f / d
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, size):
                if row_k[j]:
                    row_i[j] -= ratio * row_k[j]
    return True


def poly_det(rows: Sequence[Sequence[UniPoly]]) -> UniPoly:
    """Fraction-free Bareiss determinant over Q[x]."""
    M = [list(r) for r in rows]
    size = len(M)
    if size == 0:
        return UniPoly([1])
    sign = 1
    prev = UniPoly([1])
    for k in range(size - 1):
        if M[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not M[i][k].is_zero()), None)
            if swap is None:
                return UniPoly()
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                M[i][j] = (pivot * M[i][j] - M[i][k] * M[k][j]).exact_div(prev)
        prev = pivot
    det = M[-1][-1]
    return -det if sign < 0 else det


def det_diagonal_poly(d: DiagonalPencil, *, cap: int | None = None) -> UniPoly:
    """det(M0 + x MSigma) as an exact polynomial in x."""
    cap = DEFAULT_DET_CAP if cap is None else cap
    if d.size > cap:
        raise DeterminantCapError(f"pencil size {d.size} exceeds determinant cap {cap}")
    rows = [[UniPoly([a, b]) for a, b in zip(r0, r1)] for r0, r1 in zip(d.M0, d.MSigma)]
    return poly_det(rows)
