import math
from fractions import Fraction

import pytest

from sigmacolor.presenters import BASE, lower32, lower53, lower74
from sigmacolor.recurrences import FAMILIES, closed_alpha, fibonacci, limit, table

GAMMA = Fraction("0.21030395")


def test_fibonacci():
    assert [fibonacci(n) for n in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]


@pytest.mark.parametrize("family", ["lower32", "lower53", "lower74"])
def test_agreement(family):
    assert all(row.agrees for row in table(family, 20))


@pytest.mark.parametrize("gamma", [Fraction(1, 2), GAMMA, Fraction(9, 10)])
def test_agreement_lower52(gamma):
    assert all(row.agrees for row in table("lower52", 20, gamma))


def test_table_rows():
    assert table("lower32", 2)[2].alpha == Fraction(8, 5)
    assert table("lower53", 1)[1].alpha == Fraction(5, 3)
    row = table("lower74", 1)[1]
    assert (row.alpha, row.sigma, row.M) == (Fraction(7, 4), 2, 4)
    row = table("lower52", 3, GAMMA)[3]
    assert row.alpha >= 2 and row.M == 4**39 and row.power_of_four == 39


def test_table_matches_schema():
    eps = Fraction(1, 10)
    for family, ctor in (("lower32", lower32), ("lower53", lower53), ("lower74", lower74)):
        s = BASE
        for row in table(family, 4)[1:]:
            s = ctor(s, eps)
            assert s.alpha == row.alpha


@pytest.mark.parametrize(
    "family,value",
    [("lower32", (1 + math.sqrt(5)) / 2), ("lower53", math.sqrt(3)), ("lower74", (1 + math.sqrt(7)) / 2)],
)
def test_limits(family, value):
    assert limit(family) == pytest.approx(value, abs=1e-15)
    assert abs(float(table(family, 40)[-1].alpha) - value) < 1e-9


def test_limit_lower52():
    assert abs(float(table("lower52", 60, GAMMA)[-1].alpha) - 5 / (2 * (1 + float(GAMMA)))) < 1e-9


def test_closed_form_at_zero():
    assert all(closed_alpha(f, 0, Fraction(1, 2)) == pytest.approx(1) for f in FAMILIES)


def test_table_errors():
    with pytest.raises(ValueError):
        table("lower99", 2)
    with pytest.raises(ValueError):
        table("lower52", 2)
    with pytest.raises(ValueError):
        table("lower32", -1)
