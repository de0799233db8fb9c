"""Adaptive Presenter strategies.

A strategy is written as a generator: it yields the next interval and is
resumed with the color the algorithm assigned to it. Composition of
strategies is then plain ``yield from``. ``StrategyPresenter`` adapts such a
generator to the ``next()`` / ``observe(color)`` protocol used by the harness.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Generator, Iterable

from ..core import Interval
from .foursplit import PartitionCase, four_split
from .schema import (
    Schema,
    inner_target,
    reduced_omega,
)

Strategy = Generator[Interval, int, object]


class ProtocolError(RuntimeError):
    """next()/observe() called out of order."""


class StrategyError(AssertionError):
    """A guarantee of the construction did not hold (improper algorithm or bug)."""


class StrategyPresenter:
    """Drives a strategy generator one interval at a time."""

    def __init__(self, strategy: Strategy):
        self._gen = strategy
        self._started = False
        self._pending: Interval | None = None
        self._upcoming: Interval | None = None
        self.done = False
        self.result = None

    def _advance(self, color=None):
        try:
            if not self._started:
                self._started = True
                self._upcoming = next(self._gen)
            else:
                self._upcoming = self._gen.send(color)
        except StopIteration as stop:
            self.done = True
            self.result = stop.value
            self._upcoming = None

    def next(self) -> Interval | None:
        if self._pending is not None:
            raise ProtocolError("next() called before the pending interval was observed")
        if not self._started:
            self._advance()
        if self.done:
            return None
        self._pending = self._upcoming
        return self._pending

    def observe(self, color: int) -> None:
        if self._pending is None:
            raise ProtocolError("observe() without a pending interval")
        self._pending = None
        self._advance(color)


# -- building blocks ---------------------------------------------------------


def copies(count: int, iv: Interval) -> Strategy:
    """Present ``iv`` ``count`` times; return the colors, in order."""
    colors = []
    for _ in range(count):
        colors.append((yield iv))
    return colors


def clique(omega: int, left=0) -> Strategy:
    """``omega`` copies of ``[left, left + 1]``."""
    left = Fraction(left)
    colors = yield from copies(omega, Interval(left, left + 1))
    return {"branch": "clique", "colors": set(colors)}


@dataclass
class SeparationResult:
    rounds: list[tuple[Interval, int]] = field(default_factory=list)
    chosen: list[tuple[Interval, int]] = field(default_factory=list)
    anchors: list[Fraction] = field(default_factory=list)

    @property
    def chosen_colors(self) -> set[int]:
        return {c for _, c in self.chosen}


def separation(omega: int, x, width, push: Iterable[int], direction: str, take: int) -> Strategy:
    """Bisection separation inside the anchor window ``[x, x + width]``.

    Each round presents the unit interval starting at the window midpoint.
    With ``direction="left"``, intervals colored from ``push`` end up left of
    all others (the window keeps its right half after a ``push`` color and
    its left half otherwise); ``"right"`` mirrors this. All ``omega``
    intervals pairwise intersect. ``chosen`` holds the ``take`` extreme
    intervals on the side away from the ``push`` colors.
    """
    if direction not in ("left", "right"):
        raise ValueError("direction must be 'left' or 'right'")
    lo, hi = Fraction(x), Fraction(x) + width
    assert hi > lo
    push = set(push)
    res = SeparationResult()
    for _ in range(omega):
        mid = (lo + hi) / 2
        iv = Interval(mid, mid + 1)
        color = yield iv
        res.rounds.append((iv, color))
        res.anchors.append(mid)
        if (color in push) == (direction == "left"):
            lo = mid
        else:
            hi = mid
    ordered = sorted(res.rounds, key=lambda e: e[0].left)
    if len({iv.left for iv, _ in ordered}) != len(ordered):
        raise StrategyError("separation anchors are not distinct")
    if take:
        res.chosen = ordered[-take:] if direction == "left" else ordered[:take]
    return res


def subgame(schema: Schema, omega: int, offset, target: int) -> Strategy:
    """Play ``schema`` at clique size ``omega`` shifted by ``offset`` until the
    algorithm has used ``target`` distinct colors in it; return those colors."""
    seen: list[int] = []
    if target <= 0:
        return seen
    gen = play(schema, omega)
    try:
        iv = next(gen)
        while True:
            color = yield iv.shift(offset)
            if color not in seen:
                seen.append(color)
                if len(seen) >= target:
                    break
            iv = gen.send(color)
    except StopIteration:
        raise StrategyError(f"{schema} at omega={omega} ended before {target} colors were used") from None
    finally:
        gen.close()
    return seen


def _require_disjoint(a, b, what):
    if set(a) & set(b):
        raise StrategyError(f"{what} share colors")


# -- recursive constructions -------------------------------------------------


def _lower32(s: Schema, omega: int) -> Strategy:
    eps, m = s.eps, s.inner.M
    w1 = reduced_omega(s, omega)
    xs = yield from subgame(s.inner, w1, 1 + eps, inner_target(s, omega))
    sep = yield from separation(omega, 0, eps / 2, xs, "left", w1)
    _require_disjoint(xs, sep.chosen_colors, "initial and separation colors")
    r = min((iv.right for iv, _ in sep.chosen), default=1 + eps / 2)
    final = yield from copies(omega - w1, Interval(r, m + 1 + eps))
    return {"branch": "final", "X": set(xs), "Y": sep.chosen_colors, "Z": set(final)}


def _lower53(s: Schema, omega: int) -> Strategy:
    eps, m = s.eps, s.inner.M
    w1 = reduced_omega(s, omega)
    xs = yield from subgame(s.inner, w1, 1 + eps / 2, inner_target(s, omega))
    left = yield from separation(omega, 0, eps / 4, xs, "left", w1)
    y1 = left.chosen_colors
    _require_disjoint(xs, y1, "initial and left separation colors")
    right = yield from separation(omega, m + 1 + 3 * eps / 4, eps / 4, set(xs) | y1, "right", w1)
    y2 = right.chosen_colors
    _require_disjoint(set(xs) | y1, y2, "right separation colors and earlier ones")
    r = min((iv.right for iv, _ in left.chosen), default=1 + eps / 4)
    lft = max((iv.left for iv, _ in right.chosen), default=m + 1 + 3 * eps / 4)
    final = yield from copies(omega - w1, Interval(r, lft))
    return {"branch": "final", "X": set(xs), "Y1": y1, "Y2": y2, "Z": set(final)}


def _lower74(s: Schema, omega: int) -> Strategy:
    eps, m, a = s.eps, s.inner.M, s.inner.alpha
    w1 = reduced_omega(s, omega)
    target = inner_target(s, omega)
    x1 = yield from subgame(s.inner, w1, 1 + eps / 3, target)
    x2 = yield from subgame(s.inner, w1, m + 1 + 2 * eps / 3, target)
    left = yield from separation(omega, 0, eps / 6, x1, "left", w1)
    right = yield from separation(omega, 2 * m + 1 + 5 * eps / 6, eps / 6, x2, "right", w1)
    _require_disjoint(x1, left.chosen_colors, "X1 and Y1")
    _require_disjoint(x2, right.chosen_colors, "X2 and Y2")
    c1 = set(x1) | left.chosen_colors
    c2 = set(x2) | right.chosen_colors
    r = min((iv.right for iv, _ in left.chosen), default=1 + eps / 6)
    lft = max((iv.left for iv, _ in right.chosen), default=2 * m + 1 + 5 * eps / 6)
    if len(c2 - c1) >= Fraction(omega) / (2 * a + 2):
        final = yield from copies(omega - w1, Interval(r, lft))
        return {"branch": "case1", "C1": c1, "C2": c2, "Z": set(final)}
    cut = m + 1 + 5 * eps / 12  # between the two initial games
    q = yield from copies(w1, Interval(cut, lft))
    _require_disjoint(q, c2, "pre-final colors and C2")
    final = yield from copies(omega - w1, Interval(r, cut))
    return {"branch": "case2", "C1": c1, "C2": c2, "Q": set(q), "Z": set(final)}


def _lower52(s: Schema, omega: int) -> Strategy:
    eps, m, gamma = s.eps, s.inner.M, s.gamma
    count = 4**s.n
    gap = eps / count
    w1 = omega // 2
    k = inner_target(s, omega)

    def start(i):  # left end of game i, 1-based
        return (i - 1) * (m + gap)

    games = []
    for i in range(1, count + 1):
        games.append((yield from subgame(s.inner, w1, start(i), k)))
    split = four_split(games, k, gamma)
    end = count * m + eps
    if not isinstance(split, PartitionCase):
        final = yield from copies(w1, Interval(0, end))
        _require_disjoint(final, split.union, "final colors and initial colors")
        return {"branch": "union", "X": set(split.union), "Z": set(final)}

    (_, r1), (_, r2), _, (l4, _) = split.ranges
    z1_iv = Interval(0, start(r1) + m + gap / 2)
    z2_iv = Interval(start(l4) - gap / 2, end)
    z1 = set((yield from copies(w1, z1_iv)))
    z2 = set((yield from copies(w1, z2_iv)))
    _require_disjoint(z1 | z2, split.witness, "Z colors and the common block colors")
    if len(z2 - z1) >= Fraction(omega, 4):
        w = yield from copies(w1, Interval(z1_iv.right, z2_iv.left))
        branch = "case2.1"
    else:
        w1_iv = Interval(z1_iv.right, start(r2) + m + gap / 2)
        w = yield from copies(w1, w1_iv)
        w += yield from copies(w1, Interval(w1_iv.right, z2_iv.left))
        branch = "case2.2"
    return {"branch": branch, "Y": set(split.witness), "Z1": z1, "Z2": z2, "W": set(w), "ranges": split.ranges}


def play(schema: Schema, omega: int) -> Strategy:
    """The strategy generator for ``schema`` at clique size ``omega``."""
    if omega < 0:
        raise ValueError("omega must be nonnegative")
    if schema.kind == "base":
        return clique(omega)
    return {
        "lower32": _lower32,
        "lower53": _lower53,
        "lower74": _lower74,
        "lower52": _lower52,
    }[schema.kind](schema, omega)


# -- presenters --------------------------------------------------------------


def presenter_for(schema: Schema, omega: int) -> StrategyPresenter:
    return StrategyPresenter(play(schema, omega))


def clique_presenter(omega: int, region_left=0) -> StrategyPresenter:
    if omega < 1:
        raise ValueError("omega must be at least 1")
    return StrategyPresenter(clique(omega, region_left))


def separation_presenter(omega: int, x, width, push, direction: str, take: int = 0) -> StrategyPresenter:
    """Standalone separation game; ``presenter.result`` is a SeparationResult."""
    if omega < 1 or width <= 0:
        raise ValueError("need omega >= 1 and a window of positive width")
    return StrategyPresenter(separation(omega, x, Fraction(width), push, direction, take))


def fixed_presenter(intervals: Iterable[Interval]) -> StrategyPresenter:
    """Non-adaptive presenter replaying a given sequence."""

    def gen():
        for iv in intervals:
            yield iv

    return StrategyPresenter(gen())
