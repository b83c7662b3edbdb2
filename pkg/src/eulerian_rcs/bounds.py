"""Bounds on |q_1|, the modulus of the most negative root of A_n.

Every value returned here is a positive number bounding |q_1| from below,
except :func:`laguerre_upper` which bounds it from above.  Pencil
inequalities naturally bound q_n (the root nearest zero) from below;
:func:`_reciprocal_bound` is the one place that turns such a bound into a
bound on |q_1| through palindromicity (q_1 q_n = 1).
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .counting import eulerian_number
from .exact import DyadicInterval, Ordering, RadicalExpr, as_rational, compare
from .oracle import DEFAULT_WIDTH, RootInterval, UniPoly, abs_extreme_root, extreme_real_root, quadratic_roots
from .pencil import (DEFAULT_DET_CAP, DiagonalPencil, det_diagonal_poly, eulerian_pencil, quadratic_form,
                     univariate_pencil)

DEFAULT_MULT_DET_CAP = int(os.environ.get("EULERIAN_RCS_DET_CAP", "8"))


class Status(str, enum.Enum):
    DEGENERATE = "degenerate"
    INVALID_DIRECTION = "invalid_direction"
    INVALID_SIGNS = "invalid_signs"
    QUADRATIC_DEGENERATE = "quadratic_degenerate"
    UNSUPPORTED = "unsupported"


BoundValue = Union[Fraction, RadicalExpr, RootInterval, Status]


def is_status(value) -> bool:
    return isinstance(value, Status)


def _reciprocal_bound(den, num):
    """From den + t*num >= 0 on the pencil (so q_n >= -den/num) to |q_1| >= num/den."""
    return num / den


def colucci_bound(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(2 ** (n + 1) - n - 2, n)


def laguerre_upper(n: int) -> RadicalExpr:
    """Upper bound from the two leading Eulerian numbers of A_n."""
    if n < 2:
        raise ValueError("the Laguerre-Samuelson bound needs n >= 2")
    e1 = eulerian_number(n, n - 1)
    e2 = eulerian_number(n, n - 2)
    radicand = Fraction(e1 * e1) - Fraction(2 * n, n - 1) * e2
    return RadicalExpr(Fraction(e1, n), Fraction(n - 1, n), radicand)


def vector_bound(d: DiagonalPencil, v: Sequence) -> Fraction | Status:
    """Lower bound on |q_1| from the scalar inequality v^T M0 v + t v^T MSigma v >= 0."""
    num = quadratic_form(d.MSigma, v)
    den = quadratic_form(d.M0, v)
    if num <= 0:
        return Status.INVALID_DIRECTION
    if den == 0:
        return Status.DEGENERATE
    if den < 0:
        # the origin lies in the relaxation, so this never happens for RZ inputs
        return Status.INVALID_DIRECTION
    return _reciprocal_bound(den, num)


@lru_cache(maxsize=None)
def univariate_det(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """(c, b, a) with det of the univariate pencil = c + b x + a x^2."""
    A0, A1 = univariate_pencil(n).constant, univariate_pencil(n).coeffs["x"]
    c = A0[0][0] * A0[1][1] - A0[0][1] ** 2
    b = A0[0][0] * A1[1][1] + A1[0][0] * A0[1][1] - 2 * A0[0][1] * A1[0][1]
    a = A1[0][0] * A1[1][1] - A1[0][1] ** 2
    return c, b, a


def un_bound(n: int) -> RadicalExpr | Status:
    """2a / (b - sqrt(b^2 - 4ac)) from the univariate pencil determinant."""
    c, b, a = univariate_det(n)
    if a == b == c == 0:
        return Status.DEGENERATE
    if not (a > 0 and b > 0 and c > 0):
        raise ArithmeticError(f"unexpected determinant signs at n={n}: a={a}, b={b}, c={c}")
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ArithmeticError(f"negative discriminant at n={n}")
    # 2a / (b - sqrt(disc)) rationalised
    return RadicalExpr(b / (2 * c), 1 / (2 * c), disc)


def b11_bound(n: int) -> Fraction | Status:
    return vector_bound(univariate_pencil(n).diagonal(), (1, 1))


def b11_closed(n: int) -> Fraction:
    num = (2 ** (n + 1) + 2 ** (2 * n + 3) - 4 * 3 ** (n + 1) - 2 ** (n + 1) * 3 ** (n + 2)
           + 3 * 4 ** (n + 1) + 8 ** (n + 1))
    den = -(2 - 2 ** (n + 2) + 2 * 3 ** (n + 1) - 4 ** (n + 1))
    return Fraction(num, den)


# -- multivariate linearisation along v = (y, 1, -1, ..., -1) ------------------------

@lru_cache(maxsize=None)
def mult_DN_coefficients(n: int) -> tuple[UniPoly, UniPoly]:
    """D(y) and N(y) as quadratics in y, from the closed expressions."""
    if n < 2:
        raise ValueError("n must be at least 2")
    F = Fraction
    p2, p3, p4, p6, p8 = (lambda e, b=b: F(b) ** e for b in (2, 3, 4, 6, 8))
    D0 = 10 - p2(n + 2) + p2(2 * n + 2) - 2 * p3(n + 1) + n
    D1 = 2 * (4 - p2(n + 1) + n)
    D2 = F(n)
    N0 = (-10 + p2(n + 3) - p2(2 * n + 3) / 3 - p2(2 * n + 4) / 3 + p2(3 * n + 4) / 7 + p2(3 * n + 5) / 7
          + 2 * p3(n) - 4 * p3(n + 1) + 2 * p3(n + 2) - p2(n + 1) * p3(n + 3) / 5 - p4(n + 1) + p4(n + 2)
          - p6(n + 2) / 5 + p8(n + 1) / 7 - n)
    N1 = -8 - p2(n + 2) + p2(n + 3) - p2(2 * n + 3) / 3 - p2(2 * n + 4) / 3 + 4 * p3(n + 1) - 2 * n
    N2 = -2 + p2(n + 1) - n
    return UniPoly([D0, D1, D2]), UniPoly([N0, N1, N2])


def mult_vector(n: int, y) -> tuple:
    return (y, 1) + (-1,) * (n - 1)


def mult_DN(n: int, y):
    """(D, N) = (v^T M0 v, v^T MSigma v) at v = (y, 1, -1, ..., -1)."""
    D, N = mult_DN_coefficients(n)
    return D(y), N(y)


def mult_DN_pencil(n: int, y) -> tuple[Fraction, Fraction]:
    """Same pair computed directly from the multivariate pencil (reference)."""
    d = eulerian_pencil(n).diagonal()
    v = mult_vector(n, as_rational(y))
    return quadratic_form(d.M0, v), quadratic_form(d.MSigma, v)


@dataclass(frozen=True)
class OptimalY:
    n: int
    y_star: RadicalExpr | None
    quadratic: UniPoly          # N'D - ND'
    d_sign: int
    n_sign: int
    status: Status | None = None

    @property
    def valid(self) -> bool:
        return self.status is None and self.d_sign > 0 and self.n_sign > 0

    @property
    def asymptotic_ratio(self) -> float:
        """y* 2^{n+1} n / 3^{n+1}; tends to 1."""
        if self.y_star is None:
            return float("nan")
        return float(self.y_star * Fraction(2 ** (self.n + 1) * self.n, 3 ** (self.n + 1)))


@lru_cache(maxsize=None)
def optimal_y(n: int) -> OptimalY:
    """Leftmost critical point of N/D, with exact signs of D and N there."""
    D, N = mult_DN_coefficients(n)
    crit = N.derivative() * D - N * D.derivative()
    if crit.degree != 2:
        return OptimalY(n, None, crit, 0, 0, Status.QUADRATIC_DEGENERATE)
    c, b, a = crit.coeffs
    y = RadicalExpr.quadratic_root(a, b, c, -1 if a > 0 else 1)
    return OptimalY(n, y, crit, D(y).sign(), N(y).sign())


def mult_v_bound(n: int) -> RadicalExpr | Status:
    opt = optimal_y(n)
    if opt.status is not None:
        return opt.status
    if not opt.valid:
        return Status.INVALID_SIGNS
    D, N = mult_DN(n, opt.y_star)
    return _reciprocal_bound(D, N)


# -- determinant of the diagonal multivariate pencil ---------------------------------

@dataclass(frozen=True)
class DetBound:
    n: int
    determinant: UniPoly
    factor: UniPoly
    root: object           # x_r, the root nearest zero (RadicalExpr or RootInterval)
    value: object          # -1/x_r (RadicalExpr or RootInterval)


def _factor_containing(p: UniPoly, root: RootInterval) -> UniPoly:
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** k for k, c in enumerate(p.coeffs))
    from .oracle import sturm_count

    _, factors = sympy.factor_list(expr, x)
    for f, _mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(sympy.Poly(f, x).all_coeffs())]
        q = UniPoly(coeffs)
        if q.degree >= 1 and sturm_count(q, root.lo, root.hi) >= 1:
            return q
    raise ArithmeticError("no factor contains the isolated root")


@lru_cache(maxsize=None)
def mult_det(n: int, cap: int = DEFAULT_MULT_DET_CAP) -> DetBound:
    """Bound from the root of det(M0 + x MSigma) nearest zero."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > cap:
        from .pencil import DeterminantCapError

        raise DeterminantCapError(f"n={n} exceeds the determinant cap {cap}")
    det = det_diagonal_poly(eulerian_pencil(n).diagonal(), cap=max(DEFAULT_DET_CAP, n + 1))
    nearest = extreme_real_root(det, "max")
    if nearest.hi >= 0:
        nearest = nearest.refine(Fraction(1, 1 << 20))
        if nearest.hi >= 0:
            raise ArithmeticError("determinant has a nonnegative root")
    factor = _factor_containing(det, nearest)
    if factor.degree <= 2:
        root = next(r for r in quadratic_roots(factor) if nearest.compare(r) == Ordering.EQUAL)
        return DetBound(n, det, factor, root, -1 / root)
    # -1/x is the largest root of t^d f(-1/t)
    recip = factor.reversed().reflect() if factor.degree % 2 == 0 else -factor.reversed().reflect()
    value = extreme_real_root(recip, "max")
    return DetBound(n, det, factor, nearest, value)


def mult_det_bound(n: int, cap: int = DEFAULT_MULT_DET_CAP):
    return mult_det(n, cap).value


# -- comparisons and reports ---------------------------------------------------------

def compare_values(x, y) -> Ordering:
    """Exact ordering between rationals, surds and root enclosures."""
    if isinstance(x, RootInterval):
        return x.compare(y)
    if isinstance(y, RootInterval):
        return Ordering(-y.compare(x))
    return compare(x, y)


def value_interval(x, bits: int = 64) -> DyadicInterval:
    if isinstance(x, RootInterval):
        return x.refine(Fraction(1, 1 << bits)).interval()
    if isinstance(x, RadicalExpr):
        return x.interval(bits)
    return DyadicInterval.point(as_rational(x))


@dataclass
class BoundReport:
    n: int
    colucci: Fraction
    laguerre_upper: RadicalExpr | Status
    un: RadicalExpr | Status
    b11: Fraction | Status
    mult_v: RadicalExpr | Status
    y_star: RadicalExpr | None
    mult_det: object | None
    oracle_root: RootInterval
    flags: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def bound_report(n: int, *, det_cap: int = DEFAULT_MULT_DET_CAP, width=DEFAULT_WIDTH) -> BoundReport:
    """All bounds for one n, with the ordering invariants checked exactly."""
    oracle = abs_extreme_root(n, width)
    un = un_bound(n)
    lag = laguerre_upper(n) if n >= 2 else Status.UNSUPPORTED
    if n >= 2:
        opt = optimal_y(n)
        mv = mult_v_bound(n)
        y_star = opt.y_star
    else:
        opt, mv, y_star = None, Status.UNSUPPORTED, None
    md = mult_det_bound(n, det_cap) if 2 <= n <= det_cap else None
    report = BoundReport(
        n=n, colucci=colucci_bound(n), laguerre_upper=lag, un=un, b11=b11_bound(n),
        mult_v=mv, y_star=y_star, mult_det=md, oracle_root=oracle,
        flags={"un_degenerate": un is Status.DEGENERATE, "mult_valid": opt is not None and opt.valid},
    )
    checks = [("colucci", report.colucci, "<=", oracle)]
    for name in ("un", "b11", "mult_v", "mult_det"):
        value = getattr(report, name)
        if value is not None and not is_status(value):
            checks.append((name, value, "<=", oracle))
    if not is_status(lag):
        checks.append(("laguerre_upper", oracle, "<=", lag))
    if md is not None and not is_status(mv):
        checks.append(("mult_det>=mult_v", mv, "<=", md))
    for name, lhs, _, rhs in checks:
        if compare_values(lhs, rhs) == Ordering.GREATER:
            report.violations.append(name)
    return report


# -- asymptotic diagnostics ----------------------------------------------------------

@dataclass(frozen=True)
class RatioRow:
    n: int
    un_ratio: DyadicInterval
    b11_ratio: DyadicInterval
    scaled_diff: DyadicInterval


def _tight(make, target_bits: int = 40, start: int = 64) -> DyadicInterval:
    """Raise working precision until the relative width is below 2^-target_bits."""
    bits = start
    while True:
        iv = make(bits)
        mag = min(abs(iv.lo), abs(iv.hi))
        if mag > 0 and iv.width <= mag / (1 << target_bits):
            return iv
        if iv.width == 0:
            return iv
        bits *= 2
        if bits > 1 << 16:
            return iv


def ratio_row(n: int, target_bits: int = 40) -> RatioRow:
    scale = Fraction(1, 2 ** (n + 1))
    un = un_bound(n)
    mv = mult_v_bound(n)
    un_ratio = _tight(lambda bits: un.interval(bits) * scale, target_bits)
    b11_ratio = DyadicInterval.point(b11_bound(n) * scale)
    factor = 2 * Fraction(4, 3) ** n
    if is_status(mv):
        diff = DyadicInterval(Fraction(0), Fraction(0))
    else:
        diff = _tight(lambda bits: (mv.interval(bits) - un.interval(bits)) * factor, target_bits)
    return RatioRow(n, un_ratio, b11_ratio, diff)


def ratio_diagnostics(n_min: int, n_max: int, target_bits: int = 40) -> list[RatioRow]:
    if not 2 <= n_min <= n_max:
        raise ValueError("need 2 <= n_min <= n_max")
    return [ratio_row(n, target_bits) for n in range(n_min, n_max + 1)]


def mult_beats_un(n: int) -> bool:
    mv = mult_v_bound(n)
    return not is_status(mv) and compare(mv, un_bound(n)) == Ordering.GREATER


def crossover_index(n_max: int = 40) -> int | None:
    """Smallest n0 with mult_v(n) > un(n) for every n0 <= n <= n_max."""
    n0 = None
    for n in range(n_max, 1, -1):
        if mult_beats_un(n):
            n0 = n
        else:
            break
    return n0
