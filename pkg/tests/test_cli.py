import csv
import io
import json
from fractions import Fraction

import pytest

from eulerian_rcs.bounds import bound_report, compare_values
from eulerian_rcs.cli import HEADER, decimal_ceil, decimal_floor, main
from eulerian_rcs.exact import Ordering, RadicalExpr
from eulerian_rcs.oracle import extreme_root


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_directed_rounding():
    x = RadicalExpr(2, 1, 3)
    assert decimal_floor(x, 7) == "3.7320508"
    assert decimal_ceil(x, 7) == "3.7320509"
    assert decimal_floor(Fraction(-1, 3), 3) == "-0.334"
    assert decimal_ceil(Fraction(-1, 3), 3) == "-0.333"
    assert decimal_floor(Fraction(5, 2), 2) == decimal_ceil(Fraction(5, 2), 2) == "2.50"


def test_root_command():
    code, text = run("root", "--n", "3")
    assert code == 0 and text.strip() == "[-9.8989795, -9.8989794]"


def test_table_csv():
    code, text = run("table", "--n-min", "2", "--n-max", "5", "--format", "csv")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == HEADER
    rows = list(csv.DictReader(lines[1:]))
    assert len(rows) == 4
    assert rows[0]["un"] == "3.7320508" and rows[0]["mult_v"] == "3.4142135"
    assert all("violation" not in r["flags"] for r in rows)


def test_table_values_are_valid_bounds():
    code, text = run("table", "--n-min", "2", "--n-max", "6", "--digits", "5")
    unit = Fraction(1, 10 ** 5)
    for row in csv.DictReader(text.splitlines()[1:]):
        rep = bound_report(int(row["n"]))
        for col in ("colucci", "b11", "un", "mult_v", "mult_det"):
            exact, printed = getattr(rep, col), Fraction(row[col])
            # lower bounds are rounded down by less than one unit
            assert compare_values(exact, printed) != Ordering.LESS
            assert compare_values(exact, printed + unit) == Ordering.LESS
        assert compare_values(rep.oracle_root, Fraction(row["oracle_lo"])) != Ordering.LESS
        assert compare_values(rep.oracle_root, Fraction(row["oracle_hi"])) != Ordering.GREATER
        assert compare_values(rep.laguerre_upper, Fraction(row["laguerre_upper"])) != Ordering.GREATER


def test_table_is_deterministic_and_json():
    assert run("table", "--n-max", "4") == run("table", "--n-max", "4")
    code, text = run("table", "--n-min", "2", "--n-max", "3", "--format", "json")
    obj = json.loads(text)
    assert obj["version"] == "eulerian-rcs-relaxation v1"
    assert [r["n"] for r in obj["rows"]] == ["2", "3"]


def test_verify_passes():
    code, text = run("verify", "--n-max", "6")
    assert code == 0
    assert text.count("PASS") == 7 and "FAIL" not in text


def test_ratios():
    code, text = run("ratios", "--n-min", "2", "--n-max", "3")
    rows = list(csv.DictReader(text.splitlines()[1:]))
    assert code == 0 and rows[0]["un_ratio"] == "0.4665064"


def test_pencil_json():
    code, text = run("pencil", "--n", "2")
    obj = json.loads(text)
    assert code == 0 and obj["labels"] == ["1", "x2", "x3"]
    assert obj["A0"][0] == ["2/1", "1/1", "3/1"]
    code, text = run("pencil", "--n", "2", "--univariate")
    assert json.loads(text)["coeffs"]["x"][1][1] == "52/1"


@pytest.mark.parametrize("argv", [
    ("table", "--n-min", "5", "--n-max", "2"),
    ("table", "--digits", "0"),
    ("bogus",),
    ("root",),
    ("ratios", "--n-min", "1", "--n-max", "3"),
])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_csv_round_trip_contains_exact_root():
    code, text = run("root", "--n", "4", "--digits", "9")
    lo, hi = (Fraction(s) for s in text.strip("[]\n").split(", "))
    root = extreme_root(4)
    assert root.compare(lo) != Ordering.LESS and root.compare(hi) != Ordering.GREATER
    assert hi - lo <= Fraction(1, 10 ** 9)
