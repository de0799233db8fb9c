"""Strategy recipes: the construction tree, its (alpha, sigma, M) parameters,
the recipe text format, and exact forced-color counts."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from ..core import parse_rational

KINDS = ("base", "lower32", "lower53", "lower74", "lower52")
DEFAULT_EPSILON = Fraction(1, 10)


def split_depth(gamma) -> int:
    """Smallest n with (1 + gamma/3)^n >= 5/2 - gamma, i.e.
    ceil(log(5/2 - gamma) / log(1 + gamma/3)), computed exactly."""
    gamma = Fraction(gamma)
    if not 0 < gamma < 1:
        raise ValueError("gamma must lie in (0, 1)")
    base, target = 1 + gamma / 3, Fraction(5, 2) - gamma
    n, power = 0, Fraction(1)
    while power < target:
        power *= base
        n += 1
    return n


@dataclass(frozen=True)
class Schema:
    """One node of a strategy construction tree.

    ``base`` is the clique strategy; every other kind wraps an ``inner``
    schema. ``alpha``, ``sigma`` and ``M`` follow the producing construction's
    arithmetic exactly (epsilon included).
    """

    kind: str
    inner: "Schema | None" = None
    eps: Fraction | None = None
    gamma: Fraction | None = None
    n: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown strategy {self.kind!r}")
        if self.kind == "base":
            if self.inner is not None:
                raise ValueError("base takes no inner strategy")
            return
        if self.inner is None:
            raise ValueError(f"{self.kind} needs an inner strategy")
        if self.eps is None or self.eps <= 0:
            raise ValueError(f"{self.kind} needs eps > 0")
        if self.kind == "lower52":
            if self.gamma is None or not 0 < self.gamma < 1:
                raise ValueError("lower52 needs gamma in (0, 1)")
            if self.n is None or self.n < split_depth(self.gamma):
                raise ValueError(f"lower52 needs n >= {split_depth(self.gamma)} for gamma={self.gamma}")
        elif self.gamma is not None or self.n is not None:
            raise ValueError(f"{self.kind} takes no gamma/n")

    @cached_property
    def alpha(self) -> Fraction:
        if self.kind == "base":
            return Fraction(1)
        a = self.inner.alpha
        if self.kind == "lower32":
            return 2 - 1 / (a + 1)
        if self.kind == "lower53":
            return 2 - 1 / (a + 2)
        if self.kind == "lower74":
            return 2 - 1 / (2 * a + 2)
        return Fraction(5, 4) + (1 - self.gamma) * a / 2

    @cached_property
    def sigma(self) -> Fraction:
        """Longest interval the strategy may present."""
        if self.kind == "base":
            return Fraction(1)
        m = self.inner.M
        if self.kind in ("lower32", "lower53"):
            return m + self.eps
        if self.kind == "lower74":
            return 2 * m + self.eps
        return 4**self.n * m + self.eps

    @cached_property
    def M(self) -> Fraction:
        """Every presented interval lies in ``[0, M]``."""
        if self.kind == "base":
            return Fraction(1)
        m = self.inner.M
        if self.kind == "lower32":
            return m + 1 + self.eps
        if self.kind == "lower53":
            return m + 2 + self.eps
        if self.kind == "lower74":
            return 2 * m + 2 + self.eps
        return 4**self.n * m + self.eps

    @property
    def depth(self) -> int:
        return 0 if self.kind == "base" else 1 + self.inner.depth

    def render(self) -> str:
        if self.kind == "base":
            return "base"
        args = [self.inner.render()]
        if self.kind == "lower52":
            args += [f"gamma={self.gamma}", f"n={self.n}"]
        args.append(f"eps={self.eps}")
        return f"{self.kind}({','.join(args)})"

    __str__ = render


BASE = Schema("base")


def lower32(inner: Schema, eps) -> Schema:
    return Schema("lower32", inner, parse_rational(eps))


def lower53(inner: Schema, eps) -> Schema:
    return Schema("lower53", inner, parse_rational(eps))


def lower74(inner: Schema, eps) -> Schema:
    return Schema("lower74", inner, parse_rational(eps))


def lower52(inner: Schema, gamma, n: int, eps) -> Schema:
    return Schema("lower52", inner, parse_rational(eps), parse_rational(gamma), int(n))


# -- recipe text -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|([0-9./+-]+)|(.))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        pos = m.end()
        if m.group(1):
            out.append(("name", m.group(1)))
        elif m.group(2):
            out.append(("num", m.group(2)))
        elif m.group(3).strip():
            out.append(("punct", m.group(3)))
    return out


class _Node:
    def __init__(self, kind, inner=None, params=None):
        self.kind, self.inner, self.params = kind, inner, params or {}

    def applications(self) -> int:
        return 0 if self.inner is None else 1 + self.inner.applications()


def _parse_node(toks, i):
    if i >= len(toks) or toks[i][0] != "name":
        raise ValueError("expected a strategy name")
    kind = toks[i][1].lower()
    if kind == "clique":
        kind = "base"
    if kind not in KINDS:
        raise ValueError(f"unknown strategy {kind!r}")
    i += 1
    node = _Node(kind)
    if i < len(toks) and toks[i] == ("punct", "("):
        i += 1
        first = True
        while True:
            if i < len(toks) and toks[i] == ("punct", ")"):
                i += 1
                break
            if not first:
                if i >= len(toks) or toks[i] != ("punct", ","):
                    raise ValueError("expected ',' in recipe")
                i += 1
            first = False
            if i + 1 < len(toks) and toks[i][0] == "name" and toks[i + 1] == ("punct", "="):
                key = toks[i][1].lower()
                if i + 2 >= len(toks):
                    raise ValueError(f"missing value for {key}")
                value = toks[i + 2][1]
                if key == "epsilon":
                    key = "eps"
                if key not in ("eps", "gamma", "n"):
                    raise ValueError(f"unknown recipe parameter {key!r}")
                node.params[key] = value
                i += 3
            else:
                if node.inner is not None:
                    raise ValueError("only one inner strategy allowed")
                node.inner, i = _parse_node(toks, i)
    return node, i


def parse_recipe(text: str, epsilon=None, gamma=None, n=None) -> Schema:
    """Parse e.g. ``"lower52(lower53(base),gamma=1/2,n=5,eps=1/100)"``.

    Applications without an explicit ``eps`` share the budget ``epsilon``
    equally (default 1/10). ``gamma`` and ``n`` fill in missing lower52
    parameters; a missing ``n`` defaults to the smallest admissible one.
    """
    toks = _tokens(text)
    node, i = _parse_node(toks, 0)
    if i != len(toks):
        raise ValueError(f"trailing input in recipe {text!r}")
    budget = DEFAULT_EPSILON if epsilon is None else parse_rational(epsilon)
    share = budget / max(node.applications(), 1)

    def build(nd: _Node) -> Schema:
        if nd.kind == "base":
            if nd.params:
                raise ValueError("base takes no parameters")
            return BASE
        if nd.inner is None:
            raise ValueError(f"{nd.kind} needs an inner strategy")
        inner = build(nd.inner)
        eps = parse_rational(nd.params["eps"]) if "eps" in nd.params else share
        if nd.kind == "lower52":
            g = nd.params.get("gamma", gamma)
            if g is None:
                raise ValueError("lower52 needs gamma")
            g = parse_rational(g)
            depth = nd.params.get("n", n)
            depth = split_depth(g) if depth is None else int(depth)
            return Schema("lower52", inner, eps, g, depth)
        for key in ("gamma", "n"):
            if key in nd.params:
                raise ValueError(f"{nd.kind} takes no {key}")
        return Schema(nd.kind, inner, eps)

    return build(node)


# -- forced colors -----------------------------------------------------------


def reduced_omega(schema: Schema, omega: int) -> int:
    """Clique size handed to the inner strategy."""
    a = schema.inner.alpha
    if schema.kind in ("lower32", "lower74"):
        return math.floor(Fraction(omega) / (a + 1))
    if schema.kind == "lower53":
        return math.floor(Fraction(omega) / (a + 2))
    return omega // 2


def inner_target(schema: Schema, omega: int) -> int:
    """Colors each inner game is played until, at outer clique size ``omega``.

    Capped at ``floor(alpha * omega')``: the disjointness arguments of the
    outer construction need the inner count not to exceed alpha * omega'.
    """
    w1 = reduced_omega(schema, omega)
    return min(guaranteed_colors(schema.inner, w1), math.floor(schema.inner.alpha * w1))


def split_branch_counts(schema: Schema, omega: int) -> dict[str, int]:
    """Forced colors in each final branch of a lower52 game."""
    w1 = omega // 2
    c = inner_target(schema, omega)
    rho = (3 + schema.gamma) / 3
    meet = math.ceil((1 - schema.gamma) * c)
    quarter = math.ceil(Fraction(omega, 4))
    return {
        "union": math.ceil(rho**schema.n * c) + w1,
        "case2.1": 2 * w1 + quarter + meet,
        # |Z2 \ Z1| <= ceil(omega/4) - 1, so |Z1 & Z2| >= w1 - ceil(omega/4) + 1
        "case2.2": 2 * w1 + (w1 - quarter + 1) + meet,
    }


def pair_branch_counts(schema: Schema, omega: int) -> dict[str, int]:
    """Forced colors in each final branch of a lower74 game."""
    w1 = reduced_omega(schema, omega)
    c = inner_target(schema, omega)
    q = math.ceil(Fraction(omega) / (2 * schema.inner.alpha + 2))
    return {
        "case1": c + omega + q,
        # |C1 \ C2| = |C2 \ C1| <= q - 1 pre-final colors may be reused from C1
        "case2": c + omega + w1 - q + 1,
    }


@lru_cache(maxsize=None)
def guaranteed_colors(schema: Schema, omega: int) -> int:
    """Exact lower bound on colors any algorithm uses against ``schema`` at
    clique size ``omega``, with every floor kept explicit."""
    if omega < 0:
        raise ValueError("omega must be nonnegative")
    if schema.kind == "base":
        return omega
    if omega == 0:
        return 0
    if schema.kind == "lower52":
        return min(split_branch_counts(schema, omega).values())
    if schema.kind == "lower74":
        return min(pair_branch_counts(schema, omega).values())
    w1 = reduced_omega(schema, omega)
    c = inner_target(schema, omega)
    if schema.kind == "lower32":
        return c + omega
    return c + w1 + omega  # lower53
