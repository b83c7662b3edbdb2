"""``eulerian-rcs``: bound tables, verification suites, ratios, pencils and root enclosures."""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from .bounds import (DEFAULT_MULT_DET_CAP, bound_report, compare_values, is_status,
                     ratio_diagnostics, value_interval)
from .exact import Ordering, rational_str
from .oracle import extreme_root
from .pencil import DeterminantCapError, eulerian_pencil, univariate_pencil
from .perms import DEFAULT_BRUTE_FORCE_CAP, BruteForceCapError

HEADER = "# eulerian-rcs-relaxation v1"
TABLE_COLUMNS = ("n", "colucci", "b11", "un", "y_star", "mult_v", "mult_det",
                 "oracle_lo", "oracle_hi", "laguerre_upper", "flags")
RATIO_COLUMNS = ("n", "un_ratio", "b11_ratio", "scaled_diff")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


# -- decimal rendering ---------------------------------------------------------------

def _format_scaled(k: int, digits: int) -> str:
    sign = "-" if k < 0 else ""
    whole, frac = divmod(abs(k), 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def _start_bits(value, digits: int) -> int:
    iv = value_interval(value, 8)
    mag = max(abs(iv.lo), abs(iv.hi), Fraction(1))
    return int(digits * 3.33) + 16 + max(0, int(math.log2(mag)))


def decimal_floor(value, digits: int) -> str:
    """Largest multiple of 10^-digits not above ``value`` (exact)."""
    scale = 10 ** digits
    iv = value_interval(value, _start_bits(value, digits))
    k = math.floor(iv.lo * scale)
    while compare_values(value, Fraction(k + 1, scale)) != Ordering.LESS:
        k += 1
    return _format_scaled(k, digits)


def decimal_ceil(value, digits: int) -> str:
    """Smallest multiple of 10^-digits not below ``value`` (exact)."""
    scale = 10 ** digits
    iv = value_interval(value, _start_bits(value, digits))
    k = math.ceil(iv.hi * scale)
    while compare_values(value, Fraction(k - 1, scale)) != Ordering.GREATER:
        k -= 1
    return _format_scaled(k, digits)


def decimal_nearest(iv, digits: int) -> str:
    """Nearest decimal to the midpoint of a (tight) enclosure, for diagnostics."""
    return _format_scaled(round(iv.midpoint * 10 ** digits), digits)


def _lower(value, digits):
    if value is None:
        return ""
    if is_status(value):
        return value.value
    return decimal_floor(value, digits)


# -- commands ------------------------------------------------------------------------

def table_rows(n_min: int, n_max: int, digits: int, det_cap: int) -> list[dict]:
    rows = []
    for n in range(n_min, n_max + 1):
        rep = bound_report(n, det_cap=det_cap)
        flags = [k for k, v in sorted(rep.flags.items()) if v]
        flags += [f"violation:{name}" for name in rep.violations]
        upper = rep.laguerre_upper
        rows.append({
            "n": str(n),
            "colucci": _lower(rep.colucci, digits),
            "b11": _lower(rep.b11, digits),
            "un": _lower(rep.un, digits),
            "y_star": "" if rep.y_star is None else decimal_floor(rep.y_star, digits),
            "mult_v": _lower(rep.mult_v, digits),
            "mult_det": _lower(rep.mult_det, digits),
            "oracle_lo": decimal_floor(rep.oracle_root, digits),
            "oracle_hi": decimal_ceil(rep.oracle_root, digits),
            "laguerre_upper": upper.value if is_status(upper) else decimal_ceil(upper, digits),
            "flags": ";".join(flags),
        })
    return rows


def ratio_rows(n_min: int, n_max: int, digits: int) -> list[dict]:
    return [
        {
            "n": str(r.n),
            "un_ratio": decimal_nearest(r.un_ratio, digits),
            "b11_ratio": decimal_nearest(r.b11_ratio, digits),
            "scaled_diff": decimal_nearest(r.scaled_diff, digits),
        }
        for r in ratio_diagnostics(n_min, n_max)
    ]


def emit(rows: list[dict], columns, fmt: str, out) -> None:
    if fmt == "json":
        json.dump({"version": HEADER.lstrip("# "), "columns": list(columns), "rows": rows}, out, indent=2)
        out.write("\n")
        return
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    out.write(HEADER + "\n" + buf.getvalue())


def cmd_verify(args, out) -> int:
    from .checks import run_all

    results = run_all(args.n_max, seed=args.seed, cap=args.brute_force_cap, det_cap=args.det_cap)
    if args.format == "json":
        json.dump([{"suite": r.name, "passed": r.passed, "detail": r.detail} for r in results], out, indent=2)
        out.write("\n")
    else:
        for r in results:
            out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_pencil(args, out) -> int:
    if args.univariate:
        p = univariate_pencil(args.n)
    else:
        p = eulerian_pencil(args.n, ghost=args.ghost)
    out.write(p.to_json(indent=2) + "\n")
    return EXIT_OK


def cmd_root(args, out) -> int:
    root = extreme_root(args.n)
    lo, hi = decimal_floor(root, args.digits), decimal_ceil(root, args.digits)
    if args.format == "json":
        json.dump({"n": args.n, "lo": lo, "hi": hi,
                   "exact_lo": rational_str(root.lo), "exact_hi": rational_str(root.hi)}, out)
        out.write("\n")
    else:
        out.write(f"[{lo}, {hi}]\n")
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulerian-rcs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, n_range=True, single=False):
        if n_range:
            p.add_argument("--n-min", type=_positive, default=2)
            p.add_argument("--n-max", type=_positive, default=10)
        if single:
            p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--digits", type=_positive, default=7)
        p.add_argument("--brute-force-cap", type=_positive, default=DEFAULT_BRUTE_FORCE_CAP)
        p.add_argument("--det-cap", type=_positive, default=DEFAULT_MULT_DET_CAP)
        p.add_argument("--seed", type=int, default=0)

    common(sub.add_parser("table", help="bound table, one row per n"))
    common(sub.add_parser("verify", help="run the property suites"))
    common(sub.add_parser("ratios", help="asymptotic ratio diagnostics"))
    pencil = sub.add_parser("pencil", help="dump the pencil of A_n as JSON")
    common(pencil, n_range=False, single=True)
    pencil.add_argument("--univariate", action="store_true")
    pencil.add_argument("--ghost", action="store_true", help="keep the zero row/column of x1")
    common(sub.add_parser("root", help="enclosure of the leftmost root of A_n"), n_range=False, single=True)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if hasattr(args, "n_min") and args.n_min > args.n_max:
        print("error: --n-min must not exceed --n-max", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "table":
            emit(table_rows(args.n_min, args.n_max, args.digits, args.det_cap), TABLE_COLUMNS, args.format, out)
            return EXIT_OK
        if args.command == "ratios":
            if args.n_min < 2:
                print("error: ratios need --n-min >= 2", file=sys.stderr)
                return EXIT_USAGE
            emit(ratio_rows(args.n_min, args.n_max, args.digits), RATIO_COLUMNS, args.format, out)
            return EXIT_OK
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "pencil":
            return cmd_pencil(args, out)
        return cmd_root(args, out)
    except (BruteForceCapError, DeterminantCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
