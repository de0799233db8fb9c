"""Parameter recurrences of the strategy families, with closed forms.

Iterating a construction ``k`` times from the clique schema gives exact
rational ratios ``alpha_k``; interval length and region grow as
``sigma_k + eps`` and ``M_k + eps``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .presenters.schema import split_depth

FAMILIES = ("lower32", "lower53", "lower74", "lower52")
SQRT3, SQRT7 = math.sqrt(3), math.sqrt(7)


@dataclass(frozen=True)
class Row:
    k: int
    alpha: Fraction
    closed: float  # closed-form alpha_k, floating point
    sigma: int
    M: int
    sigma_closed: int
    M_closed: int
    power_of_four: int | None = None  # lower52: M_k = 4 ** power_of_four

    @property
    def agrees(self) -> bool:
        return abs(float(self.alpha) - self.closed) <= 1e-9 and (self.sigma, self.M) == (
            self.sigma_closed,
            self.M_closed,
        )


def fibonacci(n: int) -> int:
    """F_0 = F_1 = 1."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _step(family: str, alpha: Fraction, gamma: Fraction | None) -> Fraction:
    if family == "lower32":
        return 2 - 1 / (alpha + 1)
    if family == "lower53":
        return 2 - 1 / (alpha + 2)
    if family == "lower74":
        return 2 - 1 / (2 * alpha + 2)
    return Fraction(5, 4) + (1 - gamma) * alpha / 2


def closed_alpha(family: str, k: int, gamma=None) -> float:
    if family == "lower32":
        return fibonacci(2 * k + 1) / fibonacci(2 * k)
    if family == "lower53":
        u, v = (SQRT3 - 2) ** k, (-SQRT3 - 2) ** k
        return ((SQRT3 - 3) * u + (SQRT3 + 3) * v) / ((SQRT3 - 1) * u + (SQRT3 + 1) * v)
    if family == "lower74":
        u, v = (SQRT7 - 3) ** k, (-SQRT7 - 3) ** k
        return ((SQRT7 - 4) * u + (SQRT7 + 4) * v) / ((SQRT7 - 1) * u + (SQRT7 + 1) * v)
    g = float(gamma)
    return 5 / (2 * (1 + g)) - (3 - 2 * g) / (2 * (1 + g)) * ((1 - g) / 2) ** k


def limit(family: str, gamma=None) -> float:
    return {
        "lower32": (1 + math.sqrt(5)) / 2,
        "lower53": SQRT3,
        "lower74": (1 + SQRT7) / 2,
    }.get(family) or 5 / (2 * (1 + float(gamma)))


def _closed_sizes(family: str, k: int, f: int | None) -> tuple[int, int]:
    if k == 0:
        return 1, 1
    if family == "lower32":
        return k, k + 1
    if family == "lower53":
        return 2 * k - 1, 2 * k + 1
    if family == "lower74":
        return 3 * 2**k - 4, 3 * 2**k - 2
    return 4 ** (k * f), 4 ** (k * f)


def table(family: str, iterations: int, gamma=None) -> list[Row]:
    """Rows ``k = 0..iterations``; sizes omit the ``+eps`` slack."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if iterations < 0:
        raise ValueError("iterations must be nonnegative")
    f = None
    if family == "lower52":
        if gamma is None:
            raise ValueError("lower52 needs gamma")
        gamma = Fraction(gamma)
        f = split_depth(gamma)
    alpha, sigma, m = Fraction(1), 1, 1
    rows = []
    for k in range(iterations + 1):
        if k:
            alpha = _step(family, alpha, gamma)
            if family == "lower32":
                sigma, m = m, m + 1
            elif family == "lower53":
                sigma, m = m, m + 2
            elif family == "lower74":
                sigma, m = 2 * m, 2 * m + 2
            else:
                m = 4**f * m
                sigma = m
        sc, mc = _closed_sizes(family, k, f)
        rows.append(Row(k, alpha, closed_alpha(family, k, gamma), sigma, m, sc, mc, None if f is None else k * f))
    return rows
