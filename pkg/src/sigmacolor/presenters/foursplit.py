"""Combinatorics on families of equal-size color sets."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence


def lemma_4sets_check(x1, x2, x3, x4, gamma) -> bool:
    """True iff a small common intersection of the four size-k sets forces
    a large union: ``|X1 & .. & X4| <= (1-gamma)k`` implies
    ``|X1 | .. | X4| >= (3+gamma)/3 * k``.
    """
    sets = [set(x) for x in (x1, x2, x3, x4)]
    k = len(sets[0])
    if any(len(s) != k for s in sets):
        raise ValueError("all four sets must have the same size")
    gamma = Fraction(gamma)
    inter = len(set.intersection(*sets))
    union = len(set.union(*sets))
    return inter > (1 - gamma) * k or union >= (3 + gamma) / 3 * k


@dataclass(frozen=True)
class UnionCase:
    union: frozenset


@dataclass(frozen=True)
class PartitionCase:
    """Four consecutive index blocks (1-based, inclusive) covering ``1..4^n``
    whose unions share ``witness``."""

    ranges: tuple[tuple[int, int], ...]
    witness: frozenset
    level: int
    group: int


def _log4(count: int) -> int:
    n = 0
    while 4**n < count:
        n += 1
    if 4**n != count:
        raise ValueError(f"family size {count} is not a power of 4")
    return n


def four_split(sets: Sequence, k: int, gamma) -> UnionCase | PartitionCase:
    """Either the union of the ``4^n`` size-``k`` sets has at least
    ``((3+gamma)/3)^n * k`` elements, or four consecutive blocks have a
    common intersection of at least ``(1-gamma) * k`` elements.

    Groups of four are scanned bottom-up (level 0 first, left to right). The
    first group whose intersection is large (and nonempty, which only
    matters at gamma = 1) wins; its outer blocks are stretched to the ends of
    the index range, which can only enlarge the common intersection.
    """
    family = [frozenset(s) for s in sets]
    n = _log4(len(family))
    if any(len(s) != k for s in family):
        raise ValueError(f"every set must have exactly {k} elements")
    threshold = max((1 - Fraction(gamma)) * k, 1)
    total = len(family)

    level, width = family, 1
    for j in range(n):
        for g in range(len(level) // 4):
            quad = level[4 * g : 4 * g + 4]
            if len(quad[0] & quad[1] & quad[2] & quad[3]) >= threshold:
                start = 4 * g * width + 1
                ranges = [(start + t * width, start + (t + 1) * width - 1) for t in range(4)]
                ranges[0] = (1, ranges[0][1])
                ranges[3] = (ranges[3][0], total)
                blocks = [frozenset().union(*family[lo - 1 : hi]) for lo, hi in ranges]
                witness = reduce(frozenset.intersection, blocks)
                return PartitionCase(tuple(ranges), witness, j, g)
        level = [frozenset().union(*level[4 * g : 4 * g + 4]) for g in range(len(level) // 4)]
        width *= 4
    return UnionCase(level[0])
