"""Exact rationals, closed intervals, transcripts and offline oracles."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from . import kernels

Rational = Fraction


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a finite decimal string into an exact Fraction.

    Raises ValueError on anything else (floats are rejected: they are not exact).
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    s = text.strip()
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational: {text!r}") from None


def render_rational(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True, order=True)
class Interval:
    """Closed interval ``[left, right]`` with exact endpoints, ``left < right``."""

    left: Fraction
    right: Fraction

    def __post_init__(self):
        object.__setattr__(self, "left", Fraction(self.left))
        object.__setattr__(self, "right", Fraction(self.right))
        if not self.left < self.right:
            raise ValueError(f"degenerate interval [{self.left}, {self.right}]")

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    def shift(self, dx) -> "Interval":
        return Interval(self.left + dx, self.right + dx)

    def contains(self, other: "Interval") -> bool:
        return self.left <= other.left and other.right <= self.right

    def __str__(self):
        return f"[{self.left}, {self.right}]"


def intersects(a: Interval, b: Interval) -> bool:
    # closed: a shared endpoint counts
    return a.left <= b.right and b.left <= a.right


class Entry(NamedTuple):
    interval: Interval
    color: int


@dataclass
class Transcript:
    """Presentation-ordered record of one game."""

    entries: list[Entry] = field(default_factory=list)

    def append(self, interval: Interval, color: int) -> None:
        self.entries.append(Entry(interval, color))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def intervals(self) -> list[Interval]:
        return [e.interval for e in self.entries]

    @property
    def colors(self) -> list[int]:
        return [e.color for e in self.entries]

    def distinct_colors(self) -> int:
        return len(set(self.colors))

    def to_json(self) -> str:
        return json.dumps(
            [
                {"left": render_rational(e.interval.left), "right": render_rational(e.interval.right), "color": e.color}
                for e in self.entries
            ]
        )

    @classmethod
    def from_json(cls, text: str) -> "Transcript":
        """Inverse of ``to_json``. Raises ValueError on malformed input."""
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("transcript must be a JSON array")
        t = cls()
        for item in data:
            if not isinstance(item, dict) or set(item) != {"left", "right", "color"}:
                raise ValueError(f"bad transcript entry: {item!r}")
            color = item["color"]
            if not isinstance(color, int) or isinstance(color, bool) or color < 0:
                raise ValueError(f"bad color: {color!r}")
            t.append(Interval(parse_rational(item["left"]), parse_rational(item["right"])), color)
        return t


def rank_endpoints(intervals: Iterable[Interval]) -> tuple[list[int], list[int]]:
    """Replace endpoints by their rank among all distinct endpoint values."""
    intervals = list(intervals)
    ends = [iv.left for iv in intervals] + [iv.right for iv in intervals]
    # integer keys over a common denominator: exact, and much cheaper to
    # hash and sort than Fractions
    d = math.lcm(*{q.denominator for q in ends}) if ends else 1
    keys = [q.numerator * (d // q.denominator) for q in ends]
    rank = {v: k for k, v in enumerate(sorted(set(keys)))}
    ranks = [rank[v] for v in keys]
    n = len(intervals)
    return ranks[:n], ranks[n:]


def clique_number(intervals: Iterable[Interval]) -> int:
    """Maximum number of intervals sharing a point (starts swept before ends)."""
    lo, hi = rank_endpoints(intervals)
    return kernels.max_overlap(lo, hi)


def verify_proper(transcript: Transcript | Iterable[Entry], ranked=None) -> tuple[int, int] | None:
    """None if the coloring is proper, else the first violating index pair.

    ``ranked`` may pass a precomputed ``rank_endpoints`` result.
    """
    entries = list(transcript)
    lo, hi = ranked or rank_endpoints(e[0] for e in entries)
    # colors are opaque; densify so the compiled kernel sees small ints
    dense: dict[int, int] = {}
    colors = [dense.setdefault(e[1], len(dense)) for e in entries]
    return kernels.first_conflict(lo, hi, colors)


def offline_optimal_coloring(intervals: Iterable[Interval]) -> list[int]:
    """Greedy coloring by nondecreasing left endpoint; uses exactly
    ``clique_number(intervals)`` colors."""
    lo, hi = rank_endpoints(intervals)
    return kernels.greedy_by_left(lo, hi)


@dataclass(frozen=True)
class BoundsReport:
    min_len: Fraction | None
    max_len: Fraction | None
    containment: bool

    def lengths_within(self, sigma) -> bool:
        if self.min_len is None:
            return True
        return 1 <= self.min_len and self.max_len <= sigma


def bounds_report(transcript, sigma, region: Interval) -> BoundsReport:
    """Length extremes and containment in ``region``.

    ``sigma`` is not enforced here; callers compare against it (see
    ``BoundsReport.lengths_within``).
    """
    ivs = [e[0] for e in transcript]
    if not ivs:
        return BoundsReport(None, None, True)
    lengths = [iv.length for iv in ivs]
    return BoundsReport(min(lengths), max(lengths), all(region.contains(iv) for iv in ivs))
