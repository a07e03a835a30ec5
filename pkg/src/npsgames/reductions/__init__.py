"""Registered SE reductions and chain parsing.

A chain is written ``a>b>c``: every adjacent pair must be a registered edge,
and the edges are composed left to right.
"""

from __future__ import annotations

from functools import reduce

from ..core import SEReduction, compose, identity_reduction
from ..errors import UnknownReduction
from ..problems import get_problem
from .cover import (
    CLIQUE_V_TO_CLIQUE_E,
    IS_TO_CLIQUE_V,
    VC_TO_DOMINATING_SET,
    VC_TO_FAS,
    VC_TO_FVS,
    VC_TO_HITTING_SET,
    VC_TO_P_CENTER,
    VC_TO_P_MEDIAN,
    VC_TO_SET_COVER,
    VC_TO_UFL,
)
from .hamilton import DHAM_CYCLE_TO_UHAM_CYCLE, DHAM_PATH_TO_CYCLE, UHAM_CYCLE_TO_TSP
from .numbers import PARTITION_TO_SCHEDULING, SUBSET_SUM_TO_KNAPSACK, SUBSET_SUM_TO_PARTITION
from .sat import SAT_L_TO_3SAT_L, SAT_L_TO_SAT_V, SAT_V_TO_SAT_L
from .threesat import (
    THREESAT_TO_DHAM_PATH,
    THREESAT_TO_INDEPENDENT_SET,
    THREESAT_TO_STEINER_TREE,
    THREESAT_TO_SUBSET_SUM,
    THREESAT_TO_VERTEX_COVER,
)

REDUCTIONS: dict[tuple[str, str], SEReduction] = {
    (r.source.name, r.target.name): r
    for r in (
        SAT_L_TO_SAT_V, SAT_V_TO_SAT_L, SAT_L_TO_3SAT_L,
        THREESAT_TO_VERTEX_COVER, THREESAT_TO_INDEPENDENT_SET, THREESAT_TO_SUBSET_SUM,
        THREESAT_TO_DHAM_PATH, THREESAT_TO_STEINER_TREE,
        VC_TO_DOMINATING_SET, VC_TO_SET_COVER, VC_TO_HITTING_SET, VC_TO_FVS, VC_TO_FAS,
        VC_TO_UFL, VC_TO_P_CENTER, VC_TO_P_MEDIAN,
        IS_TO_CLIQUE_V, CLIQUE_V_TO_CLIQUE_E,
        SUBSET_SUM_TO_KNAPSACK, SUBSET_SUM_TO_PARTITION, PARTITION_TO_SCHEDULING,
        DHAM_PATH_TO_CYCLE, DHAM_CYCLE_TO_UHAM_CYCLE, UHAM_CYCLE_TO_TSP,
    )
}


def get_reduction(source: str, target: str) -> SEReduction:
    """The registered edge, or the identity when both names agree."""
    if source == target:
        return identity_reduction(get_problem(source))
    try:
        return REDUCTIONS[(source, target)]
    except KeyError:
        raise UnknownReduction(f"no registered reduction {source}>{target}") from None


def parse_chain(chain: str) -> SEReduction:
    names = [part.strip() for part in chain.split(">")]
    if len(names) < 2 or not all(names):
        raise UnknownReduction(f"a chain needs at least two problem names: {chain!r}")
    edges = [get_reduction(a, b) for a, b in zip(names, names[1:])]
    return reduce(compose, edges)


__all__ = ["REDUCTIONS", "get_reduction", "parse_chain"]
