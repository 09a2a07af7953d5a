import math
from fractions import Fraction

import pytest

from collatzlab.figures import (
    FigureSeries,
    emit_figure,
    golden_gap_series,
    histogram_series,
    quotient_series,
    rb_series,
    succ_series,
    table1_series,
)
from collatzlab.scanner import scan

TABLE1_ROWS = (
    (0, 0, 0, "-", ""),
    (1, 1, 1, Fraction(1), 1.0),
    (2, 2, 1, Fraction(1, 2), 0.5),
    (3, 3, 2, Fraction(2, 3), 2 / 3),
    (4, 5, 3, Fraction(3, 5), 0.6),
    (5, 8, 5, Fraction(5, 8), 0.625),
    (6, 13, 8, Fraction(8, 13), 8 / 13),
    (7, 21, 13, Fraction(13, 21), 13 / 21),
)


def test_table1_series_exact():
    series = table1_series(7)
    assert series.rows == TABLE1_ROWS


def test_succ_series():
    series = succ_series(90)
    assert len(series.rows) == 90
    row12 = series.rows[11]
    assert row12[0] == 12
    assert row12[1] == pytest.approx(-3.303123502259467)
    assert row12[2] == 0.0


def test_rb_series():
    series = rb_series(40)
    row2 = series.rows[1]
    assert row2[0] == 2 and row2[1] == 2 and row2[2] == 2.0
    assert row2[-1] == pytest.approx(math.log(3) / math.log(2))
    assert series.headers[0] == "n"


def test_quotient_series_small_range():
    series = quotient_series(b=100, threads=1)
    assert len(series.rows) == 99
    assert series.rows[0][0] == 2
    by_x = {row[0]: row for row in series.rows}
    assert by_x[27][1] == Fraction(41, 70)
    assert by_x[27][3] == 0.625


def test_golden_gap_series():
    series = golden_gap_series(10)
    assert len(series.rows) == 10
    assert series.rows[0][1] == pytest.approx(0.3819660112501051)


def test_histogram_series_counts():
    summary = scan(1, 500)
    series = histogram_series(summary)
    assert len(series.rows) == 128
    assert sum(row[2] for row in series.rows) == 500 - summary.ratio_undefined - summary.ratio_ge_one
    assert series.rows[0][0] == 0 and series.rows[-1][1] == 1


@pytest.mark.parametrize("name,params", [
    ("table1", {}),
    ("succ", {"n_max": 25}),
    ("rb", {"n_max": 25}),
    ("quotient", {"b": 60, "threads": 1}),
])
def test_csv_round_trip(tmp_path, name, params):
    series = emit_figure(name, out=tmp_path / f"{name}.csv", **params)
    back = FigureSeries.from_csv(tmp_path / f"{name}.csv", name=name)
    assert back.headers == series.headers
    assert len(back.rows) == len(series.rows)
    for mine, parsed in zip(series.rows, back.rows):
        assert parsed == mine


def test_emit_figure_rejects_unknown_name(tmp_path):
    with pytest.raises(ValueError):
        emit_figure("nope", out=tmp_path / "x.csv")


def test_figure_series_validation():
    with pytest.raises(ValueError):
        FigureSeries("bad", ("x", "y"), ((2, 0.0), (1, 0.0)))
    with pytest.raises(ValueError):
        FigureSeries("bad", ("x", "y"), ((1, 0.0), (1, 0.0)))
    with pytest.raises(ValueError):
        FigureSeries("bad", ("x", "y"), ((1, 0.0, 3.0),))
