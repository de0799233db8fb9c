"""Game driver, per-game validation and experiment grids."""
from __future__ import annotations

import csv
import io
import json
import os
import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from .algorithms import ALGORITHMS, BlockAlgorithm, make_algorithm
from . import kernels
from .core import Interval, Transcript, bounds_report, parse_rational, rank_endpoints, verify_proper
from .presenters import ProtocolError, Schema, fixed_presenter, guaranteed_colors, parse_recipe, presenter_for

WORKERS_ENV = "SIGMACOLOR_WORKERS"
CSV_COLUMNS = [
    "algorithm",
    "recipe",
    "omega",
    "colors_used",
    "guaranteed",
    "clique",
    "ratio",
    "proper",
    "sigma_ok",
    "region_ok",
    "upper_bound",
    "bound_ok",
]


def run_game(algorithm, presenter) -> Transcript:
    """Alternate ``presenter.next()`` / ``algorithm.color()`` / ``presenter.observe()``
    until the presenter is done."""
    transcript = Transcript()
    while True:
        iv = presenter.next()
        if iv is None:
            return transcript
        color = algorithm.color(iv)
        if not isinstance(color, int) or color < 0:
            raise ProtocolError(f"algorithm returned invalid color {color!r}")
        presenter.observe(color)
        transcript.append(iv, color)


@dataclass(frozen=True)
class GameReport:
    omega_target: int
    colors_used: int
    clique_number: int
    guaranteed: int
    proper: bool
    sigma_ok: bool
    region_ok: bool
    rounds: int

    @property
    def ok(self) -> bool:
        """Every obligation of a valid game at once."""
        return (
            self.proper
            and self.sigma_ok
            and self.region_ok
            and self.clique_number <= self.omega_target
            and self.colors_used >= self.guaranteed
        )


def evaluate(transcript: Transcript, recipe: Schema | None, omega: int) -> GameReport:
    """Check a transcript against a strategy's declared constraints.

    Without a recipe (non-adversarial instances) the length and region checks
    are vacuous and nothing is guaranteed.
    """
    if recipe is None:
        sigma_ok = region_ok = True
        guaranteed = 0
    else:
        rep = bounds_report(transcript, recipe.sigma, Interval(0, recipe.M))
        sigma_ok = rep.lengths_within(recipe.sigma)
        region_ok = rep.containment
        guaranteed = guaranteed_colors(recipe, omega)
    ranked = rank_endpoints(transcript.intervals)
    return GameReport(
        omega_target=omega,
        colors_used=transcript.distinct_colors(),
        clique_number=kernels.max_overlap(*ranked),
        guaranteed=guaranteed,
        proper=verify_proper(transcript, ranked) is None,
        sigma_ok=sigma_ok,
        region_ok=region_ok,
        rounds=len(transcript),
    )


def random_instance(rng: random.Random, count: int, sigma, width=None, denominator: int = 12) -> list[Interval]:
    """``count`` intervals with left ends uniform on a grid over ``[0, width]``
    and lengths uniform on a grid over ``[1, sigma]``. Sanity-test input only."""
    sigma = parse_rational(sigma)
    width = Fraction(max(count // 4, 1)) if width is None else parse_rational(width)
    out = []
    for _ in range(count):
        left = Fraction(rng.randint(0, int(width * denominator)), denominator)
        length = 1 + (sigma - 1) * Fraction(rng.randint(0, denominator), denominator)
        out.append(Interval(left, left + length))
    return out


# -- grid --------------------------------------------------------------------

_CALL = re.compile(r"^\s*([A-Za-z_]\w*)\s*(?:\((.*)\))?\s*$")


def _parse_call(text: str) -> tuple[str, dict[str, str]]:
    m = _CALL.match(text)
    if not m:
        raise ValueError(f"cannot parse {text!r}")
    params = {}
    if m.group(2):
        for part in m.group(2).split(","):
            if "=" not in part:
                raise ValueError(f"expected key=value in {text!r}")
            k, v = part.split("=", 1)
            params[k.strip()] = v.strip()
    return m.group(1).lower(), params


def parse_algorithm(text: str):
    """``"firstfit"`` or ``"block(sigma=3/2,b=2)"`` -> (name, sigma, b)."""
    name, params = _parse_call(text)
    unknown = set(params) - {"sigma", "b"}
    if unknown:
        raise ValueError(f"unknown algorithm parameters {sorted(unknown)}")
    if name not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {name!r}")
    sigma = parse_rational(params["sigma"]) if "sigma" in params else None
    b = int(params["b"]) if "b" in params else None
    if b is not None and b < 1:
        raise ValueError("b must be a positive integer")
    return name, sigma, b


def _run_row(row):
    algo_text, recipe_text, omega, seed = row
    name, sigma, b = parse_algorithm(algo_text)
    if recipe_text.startswith("random"):
        _, params = _parse_call(recipe_text)
        inst_sigma = parse_rational(params.get("sigma", sigma if sigma is not None else 1))
        rng = random.Random(f"{seed}:{algo_text}:{recipe_text}:{omega}")
        instance = random_instance(rng, omega, inst_sigma, params.get("width"))
        algo = make_algorithm(name, sigma if sigma is not None else inst_sigma, b)
        transcript = run_game(algo, fixed_presenter(instance))
        report = evaluate(transcript, None, omega)
        report = GameReport(**{**asdict(report), "omega_target": report.clique_number})
    else:
        recipe = parse_recipe(recipe_text)
        algo = make_algorithm(name, sigma if sigma is not None else recipe.sigma, b)
        transcript = run_game(algo, presenter_for(recipe, omega))
        report = evaluate(transcript, recipe, omega)
    bound = algo.color_bound(report.clique_number) if isinstance(algo, BlockAlgorithm) else None
    return {
        "algorithm": algo_text,
        "recipe": recipe_text,
        "omega": omega,
        "colors_used": report.colors_used,
        "guaranteed": report.guaranteed,
        "clique": report.clique_number,
        "ratio": f"{report.colors_used / report.omega_target:.6f}" if report.omega_target else "",
        "proper": report.proper,
        "sigma_ok": report.sigma_ok,
        "region_ok": report.region_ok,
        "upper_bound": "" if bound is None else bound,
        "bound_ok": "" if bound is None else report.colors_used <= bound,
    }


def _workers(workers):
    if workers is not None:
        return max(int(workers), 1)
    env = os.environ.get(WORKERS_ENV)
    return max(int(env), 1) if env else 1


def experiment_grid(config: dict, workers: int | None = None) -> list[dict]:
    """One row per (algorithm, recipe, omega), in that nesting order.

    ``config`` keys: ``algorithms``, ``recipes``, ``omegas`` and optional
    ``seed``. A recipe ``random(sigma=...,width=...)`` replays a seeded
    random instance with ``omega`` intervals instead of an adaptive strategy;
    its ratio is taken against the measured clique number.
    """
    allowed = {"algorithms", "recipes", "omegas", "seed"}
    unknown = set(config) - allowed
    if unknown:
        raise ValueError(f"unknown config keys {sorted(unknown)}")
    missing = {"algorithms", "recipes", "omegas"} - set(config)
    if missing:
        raise ValueError(f"missing config keys {sorted(missing)}")
    seed = config.get("seed", 0)
    for a in config["algorithms"]:
        parse_algorithm(a)
    for r in config["recipes"]:
        if not r.startswith("random"):
            parse_recipe(r)
    rows = [(a, r, int(w), seed) for a in config["algorithms"] for r in config["recipes"] for w in config["omegas"]]
    n = _workers(workers)
    if n == 1:
        return [_run_row(row) for row in rows]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(_run_row, rows))


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def load_config(path) -> dict:
    with open(path) as fh:
        return json.load(fh)
