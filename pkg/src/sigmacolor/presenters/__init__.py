"""Presenter (adversary) strategies and their forced-color guarantees."""
from ..core import parse_rational
from .foursplit import PartitionCase, UnionCase, four_split, lemma_4sets_check
from .schema import (
    BASE,
    Schema,
    guaranteed_colors,
    inner_target,
    lower32,
    lower52,
    lower53,
    lower74,
    pair_branch_counts,
    parse_recipe,
    split_branch_counts,
    split_depth,
)
from .strategies import (
    ProtocolError,
    SeparationResult,
    StrategyError,
    StrategyPresenter,
    clique_presenter,
    fixed_presenter,
    play,
    presenter_for,
    separation_presenter,
)


def lower32_presenter(omega, inner=BASE, epsilon="1/10"):
    return presenter_for(lower32(inner, epsilon), omega)


def lower53_presenter(omega, inner=BASE, epsilon="1/10"):
    return presenter_for(lower53(inner, epsilon), omega)


def lower74_presenter(omega, inner=BASE, epsilon="1/10"):
    return presenter_for(lower74(inner, epsilon), omega)


def lower52_presenter(omega, inner=BASE, gamma="1/2", n=None, epsilon="1/10"):
    """``n`` defaults to the smallest admissible split depth for ``gamma``."""
    depth = split_depth(parse_rational(gamma)) if n is None else n
    return presenter_for(lower52(inner, gamma, depth, epsilon), omega)
