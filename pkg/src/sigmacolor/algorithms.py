"""Online coloring algorithms.

Every algorithm exposes ``color(interval) -> int`` and is single-game
mutable state: the color is assigned immediately and never revised.
"""
from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from fractions import Fraction

from .core import Interval, parse_rational


class FirstFit:
    """Smallest color not used by an already presented intersecting interval."""

    name = "firstfit"

    def __init__(self):
        # distinct left endpoints, sorted, with a parallel list of groups
        # {right: colors}. Strategies repeat intervals a lot, so grouping
        # keeps queries short.
        self._lefts: list[Fraction] = []
        self._groups: list[dict[tuple[int, int], set[int]]] = []
        self._max_len = Fraction(0)

    def neighbour_colors(self, iv: Interval) -> set[int]:
        # anything meeting iv starts in [iv.left - longest, iv.right]
        lo = bisect_left(self._lefts, iv.left - self._max_len)
        hi = bisect_right(self._lefts, iv.right)
        p, q = iv.left.numerator, iv.left.denominator
        used: set[int] = set()
        for group in self._groups[lo:hi]:
            for (num, den), colors in group.items():
                if num * q >= p * den:  # right >= iv.left, denominators positive
                    used |= colors
        return used

    def record(self, iv: Interval, color: int) -> None:
        pos = bisect_left(self._lefts, iv.left)
        if pos == len(self._lefts) or self._lefts[pos] != iv.left:
            self._lefts.insert(pos, iv.left)
            self._groups.insert(pos, {})
        key = (iv.right.numerator, iv.right.denominator)
        self._groups[pos].setdefault(key, set()).add(color)
        self._max_len = max(self._max_len, iv.length)

    def color(self, iv: Interval) -> int:
        used = self.neighbour_colors(iv)
        c = 0
        while c in used:
            c += 1
        self.record(iv, c)
        return c


def small_block_index(x, b: int) -> int:
    """Index ``i`` of the small block ``[i/b, (i+1)/b)`` containing ``x``."""
    if b < 1:
        raise ValueError("b must be a positive integer")
    return math.floor(Fraction(x) * b)


def select_large_block(i: int, s: int, b: int) -> int:
    """The unique ``j`` in ``{i-b+1, ..., i}`` with ``j = s (mod b)``."""
    return i - (i - s) % b


class BlockAlgorithm:
    """Round-robin block coloring for lengths in ``[1, sigma]``.

    The line is tiled by small blocks of width ``1/b``; large block ``j`` is
    ``[j/b, j/b + 1)``. An interval whose left end lies in small block ``i``
    is routed to the large block ``j`` chosen by the small counter ``S_i``
    and receives the structured color ``(j mod phi, L_j)``, with
    ``phi = ceil(b * (1 + sigma))``. Structured colors are mapped to dense
    integer ids in order of first use.
    """

    name = "block"

    def __init__(self, sigma, b: int | None = None):
        self.sigma = parse_rational(sigma)
        if self.sigma < 1:
            raise ValueError("sigma must be at least 1")
        self.b = self.sigma.denominator if b is None else int(b)
        if self.b < 1:
            raise ValueError("b must be a positive integer")
        self.phi = math.ceil(self.b * (1 + self.sigma))
        self.small_counters: dict[int, int] = {}
        self.large_counters: dict[int, int] = {}
        self.color_registry: dict[tuple[int, int], int] = {}
        self.routes: list[tuple[int, int]] = []  # (i, j) per colored interval

    def color(self, iv: Interval) -> int:
        if not 1 <= iv.length <= self.sigma:
            raise ValueError(f"interval {iv} has length outside [1, {self.sigma}]")
        i = small_block_index(iv.left, self.b)
        j = select_large_block(i, self.small_counters.get(i, 0), self.b)
        structured = (j % self.phi, self.large_counters.get(j, 0))
        cid = self.color_registry.setdefault(structured, len(self.color_registry))
        self.small_counters[i] = self.small_counters.get(i, 0) + 1
        self.large_counters[j] = self.large_counters.get(j, 0) + 1
        self.routes.append((i, j))
        return cid

    def structured(self, cid: int) -> tuple[int, int]:
        for pair, k in self.color_registry.items():
            if k == cid:
                return pair
        raise KeyError(cid)

    def color_bound(self, omega: int) -> int:
        """Upper bound on colors for an instance with clique number ``omega``."""
        return self.phi * ((omega + self.b * (self.b - 1)) // self.b)


ALGORITHMS = {"firstfit": FirstFit, "block": BlockAlgorithm}


def make_algorithm(name: str, sigma=None, b=None):
    """Build an algorithm by name; ``block`` needs ``sigma`` (rational) and
    optionally ``b``, defaulting to the denominator of ``sigma``."""
    if name == "firstfit":
        return FirstFit()
    if name == "block":
        if sigma is None:
            raise ValueError("block algorithm needs sigma")
        return BlockAlgorithm(sigma, b)
    raise ValueError(f"unknown algorithm {name!r}; expected one of {sorted(ALGORITHMS)}")
