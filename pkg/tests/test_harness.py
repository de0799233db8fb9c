from fractions import Fraction

import pytest

from sigmacolor.algorithms import BlockAlgorithm, FirstFit
from sigmacolor.core import Interval, Transcript
from sigmacolor.harness import (
    CSV_COLUMNS,
    GameReport,
    evaluate,
    experiment_grid,
    parse_algorithm,
    rows_to_csv,
    run_game,
)
from sigmacolor.presenters import BASE, ProtocolError, clique_presenter, fixed_presenter, lower32, lower53, parse_recipe, presenter_for


def test_clique_game():
    t = run_game(FirstFit(), clique_presenter(3))
    assert len(t) == 3 and set(t.colors) == {0, 1, 2}
    rep = evaluate(run_game(FirstFit(), clique_presenter(5)), BASE, 5)
    assert rep == GameReport(5, 5, 5, 5, True, True, True, 5)


def test_lower53_small():
    s = lower53(BASE, Fraction(1, 10))
    rep = evaluate(run_game(FirstFit(), presenter_for(s, 9)), s, 9)
    assert rep.guaranteed == 15 and rep.colors_used >= 15 and rep.ok


def test_lower32_block():
    s = lower32(BASE, Fraction(1, 10))
    rep = evaluate(run_game(BlockAlgorithm(2, 1), presenter_for(s, 10)), s, 10)
    assert rep.proper and rep.clique_number <= 10 and rep.colors_used >= 15


def test_tampered_transcript():
    t = Transcript()
    t.append(Interval(0, 1), 0)
    t.append(Interval(1, 2), 0)
    rep = evaluate(t, BASE, 2)
    assert not rep.proper and not rep.ok


def test_violations_flagged():
    t = Transcript()
    t.append(Interval(0, 2), 0)
    rep = evaluate(t, BASE, 1)
    assert not rep.sigma_ok and not rep.region_ok


def test_empty_presenter():
    assert len(run_game(FirstFit(), fixed_presenter([]))) == 0


def test_bad_color_rejected():
    class Broken:
        def color(self, iv):
            return -1

    with pytest.raises(ProtocolError):
        run_game(Broken(), clique_presenter(2))


def test_parse_algorithm():
    assert parse_algorithm("firstfit") == ("firstfit", None, None)
    assert parse_algorithm("block(sigma=3/2,b=2)") == ("block", Fraction(3, 2), 2)
    for bad in ("kt", "block(c=1)", "block(b=0)", "block(sigma)"):
        with pytest.raises(ValueError):
            parse_algorithm(bad)


CONFIG = {
    "algorithms": ["firstfit", "block(sigma=3/2,b=2)"],
    "recipes": ["clique", "lower32(base)", "lower53(base)"],
    "omegas": [30, 60],
    "seed": 7,
}


def test_grid_cardinality_and_order():
    rows = experiment_grid(CONFIG)
    assert len(rows) == 12
    assert [(r["algorithm"], r["recipe"], r["omega"]) for r in rows[:3]] == [
        ("firstfit", "clique", 30),
        ("firstfit", "clique", 60),
        ("firstfit", "lower32(base)", 30),
    ]
    assert all(r["proper"] and r["sigma_ok"] and r["region_ok"] and r["colors_used"] >= r["guaranteed"] for r in rows)
    assert all(r["bound_ok"] is True for r in rows if r["algorithm"].startswith("block"))


def test_grid_parallel_matches_serial():
    assert experiment_grid(CONFIG, workers=2) == experiment_grid(CONFIG, workers=1)


def test_grid_random_instances_deterministic():
    config = {"algorithms": ["block(sigma=5/3,b=3)", "firstfit"], "recipes": ["random(sigma=5/3,width=10)"], "omegas": [50, 120], "seed": 3}
    a, b = rows_to_csv(experiment_grid(config)), rows_to_csv(experiment_grid(config))
    assert a == b
    rows = experiment_grid(config)
    assert all(r["bound_ok"] is True for r in rows if r["algorithm"].startswith("block"))


def test_table_ratios():
    # ratios of the first table rows, against colors / omega at omega = 120
    config = {
        "algorithms": ["firstfit"],
        "recipes": ["lower32(lower32(base))", "lower53(base)", "lower74(base)"],
        "omegas": [120],
    }
    targets = {"lower32(lower32(base))": 1.6, "lower53(base)": 5 / 3, "lower74(base)": 1.75}
    for row in experiment_grid(config):
        assert float(row["ratio"]) >= targets[row["recipe"]] - 0.05


def test_csv_header():
    text = rows_to_csv([])
    assert text.splitlines()[0].split(",") == CSV_COLUMNS
    assert CSV_COLUMNS[:10] == ["algorithm", "recipe", "omega", "colors_used", "guaranteed", "clique", "ratio", "proper", "sigma_ok", "region_ok"]


@pytest.mark.parametrize("config", [{"algorithms": [], "recipes": []}, {**CONFIG, "colour": 1}, {**CONFIG, "recipes": ["lower9"]}])
def test_grid_config_errors(config):
    with pytest.raises(ValueError):
        experiment_grid(config)


def test_recipe_text_roundtrip():
    s = parse_recipe("lower74(lower53(base,eps=1/30),eps=1/30)")
    assert parse_recipe(str(s)) == s
