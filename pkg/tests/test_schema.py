import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigmacolor.presenters import (
    BASE,
    Schema,
    guaranteed_colors,
    lower32,
    lower52,
    lower53,
    lower74,
    pair_branch_counts,
    parse_recipe,
    split_branch_counts,
    split_depth,
)

EPS = Fraction(1, 10)


def test_parameters():
    s = lower32(BASE, EPS)
    assert (s.alpha, s.sigma, s.M) == (Fraction(3, 2), 1 + EPS, 2 + EPS)
    s = lower53(BASE, EPS)
    assert (s.alpha, s.sigma, s.M) == (Fraction(5, 3), 1 + EPS, 3 + EPS)
    s = lower74(BASE, EPS)
    assert (s.alpha, s.sigma, s.M) == (Fraction(7, 4), 2 + EPS, 4 + EPS)
    s = lower52(BASE, Fraction(1, 2), 5, EPS)
    assert s.alpha == Fraction(5, 4) + Fraction(1, 4)
    assert s.sigma == s.M == 1024 + EPS


def test_nested_lower32():
    s = lower32(lower32(BASE, EPS), EPS)
    assert s.alpha == Fraction(8, 5)
    assert s.sigma == 2 + 2 * EPS


@given(st.lists(st.sampled_from(["lower32", "lower53", "lower74"]), max_size=6))
def test_schema_invariants(kinds):
    s = BASE
    for k in kinds:
        s = Schema(k, s, EPS)
    assert s.alpha >= 1 and s.sigma >= 1 and s.M >= s.sigma
    assert s.alpha < 2


def test_split_depth():
    assert split_depth(Fraction(1, 2)) == 5
    assert split_depth(Fraction("0.21030395")) == 13
    # exact threshold agrees with the floating logarithm away from ties
    for g in (Fraction(1, 10), Fraction(1, 3), Fraction(9, 10)):
        assert split_depth(g) == math.ceil(math.log(2.5 - float(g)) / math.log(1 + float(g) / 3))
    with pytest.raises(ValueError):
        split_depth(0)


def test_lower52_needs_depth():
    with pytest.raises(ValueError):
        lower52(BASE, Fraction(1, 2), 4, EPS)
    with pytest.raises(ValueError):
        Schema("lower32", BASE, None)
    with pytest.raises(ValueError):
        Schema("lower32", BASE, EPS, gamma=Fraction(1, 2))


def test_parse_recipe():
    s = parse_recipe("lower52(lower53(base),gamma=1/2,n=5,eps=1/100)")
    assert s.kind == "lower52" and s.n == 5 and s.eps == Fraction(1, 100)
    assert s.inner.kind == "lower53"
    # unparameterised steps share the default budget
    assert s.inner.eps == Fraction(1, 20)
    assert parse_recipe("clique") == BASE
    assert parse_recipe("lower32(lower32(base))").eps == Fraction(1, 20)
    assert parse_recipe("lower32(base)", epsilon="1/4").eps == Fraction(1, 4)
    assert parse_recipe("lower52(base)", gamma="1/2").n == 5
    assert parse_recipe(str(s)) == s


@pytest.mark.parametrize(
    "bad",
    ["", "lower99(base)", "lower32", "lower32(base", "base(x=1)", "lower32(base,gamma=1/2)", "lower52(base)", "lower32(base) junk", "lower32(base,base)"],
)
def test_parse_recipe_rejects(bad):
    with pytest.raises(ValueError):
        parse_recipe(bad)


# independent counts for the clique base, written out from the construction
def count32(w):
    return w // 2 + w


def count53(w):
    return w // 3 * 2 + w


def count74(w):
    w1, q = w // 2, -(-w // 4)
    return min(w1 + w + q, w1 + w + w1 - q + 1)


@pytest.mark.parametrize(
    "recipe,omega,expected",
    [
        (BASE, 7, 7),
        (lower32(BASE, EPS), 10, 15),
        (lower53(BASE, EPS), 99, 165),
        (lower53(BASE, EPS), 9, 15),
        (lower74(BASE, EPS), 100, 175),
        (lower52(BASE, Fraction(1, 2), 5, EPS), 20, 30),
    ],
)
def test_guaranteed_examples(recipe, omega, expected):
    assert guaranteed_colors(recipe, omega) == expected


def test_split_branch_counts_example():
    counts = split_branch_counts(lower52(BASE, Fraction(1, 2), 5, EPS), 20)
    assert counts["union"] == math.ceil(Fraction(7, 6) ** 5 * 10) + 10 == 32
    assert counts["case2.1"] == 30
    # tighter than the quarter estimate, still at least 30
    assert counts["case2.2"] == 31


@given(st.integers(0, 400))
def test_guaranteed_matches_closed_counts(w):
    assert guaranteed_colors(lower32(BASE, EPS), w) == count32(w)
    assert guaranteed_colors(lower53(BASE, EPS), w) == count53(w)
    if w:
        assert guaranteed_colors(lower74(BASE, EPS), w) == count74(w)


@given(st.integers(1, 400))
def test_pair_branches(w):
    c = pair_branch_counts(lower74(BASE, EPS), w)
    assert c["case1"] == w // 2 + w + -(-w // 4)


def test_pair_bound_below_quarter_formula():
    # the case-2 count falls one short of w1 + ceil(w/4) + w exactly when w = 1 mod 4
    s = lower74(BASE, EPS)
    for w in range(20, 101):
        naive = w // 2 + -(-w // 4) + w
        assert guaranteed_colors(s, w) == (naive - 1 if w % 4 == 1 else naive)


@given(st.integers(1, 300), st.sampled_from(["lower32", "lower53", "lower74"]))
def test_guaranteed_monotone(w, kind):
    s = Schema(kind, BASE, EPS)
    assert guaranteed_colors(s, w) <= guaranteed_colors(s, w + 1)


@given(st.integers(1, 300))
def test_nested_guarantee_ratio(w):
    # nested guarantees never exceed alpha * omega
    for s in (lower32(lower32(BASE, EPS), EPS), lower53(lower32(BASE, EPS), EPS), lower74(lower74(BASE, EPS), EPS)):
        assert guaranteed_colors(s, w) <= s.alpha * w
