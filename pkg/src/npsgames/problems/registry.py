"""Name lookup for every catalog problem, including transform prefixes."""

from __future__ import annotations

from functools import lru_cache

from ..core import ProblemSpec
from ..errors import UnknownProblem
from .cycles import FAS, FVS
from .facility import P_CENTER, P_MEDIAN, UFL
from .graphs import (
    CLIQUE_E,
    CLIQUE_V,
    DOMINATING_SET,
    HITTING_SET,
    INDEPENDENT_SET,
    SET_COVER,
    VERTEX_COVER,
)
from .hamilton import DHAM_CYCLE, DHAM_PATH, TSP, UHAM_CYCLE
from .numbers import KNAPSACK, PARTITION, PARTITION_FREE, SCHEDULING, SUBSET_SUM
from .sat import SAT_L, SAT_V, THREE_SAT_L, THREE_SAT_V
from .steiner import STEINER_TREE
from .transforms import complement_model, dual_model, literal_model

PROBLEMS: dict[str, ProblemSpec] = {
    p.name: p
    for p in (
        SAT_L, SAT_V, THREE_SAT_L, THREE_SAT_V,
        VERTEX_COVER, INDEPENDENT_SET, CLIQUE_V, CLIQUE_E, DOMINATING_SET,
        SET_COVER, HITTING_SET, FVS, FAS, UFL, P_CENTER, P_MEDIAN,
        SUBSET_SUM, KNAPSACK, PARTITION, PARTITION_FREE, SCHEDULING,
        DHAM_PATH, DHAM_CYCLE, UHAM_CYCLE, TSP, STEINER_TREE,
    )
}

TRANSFORMS = {"complement": complement_model, "literal": literal_model, "dual": dual_model}


@lru_cache(maxsize=None)
def get_problem(name: str) -> ProblemSpec:
    """Resolve ``name``; prefixes such as ``dual:literal:vertex-cover`` apply right to left."""
    if name in PROBLEMS:
        return PROBLEMS[name]
    head, sep, rest = name.partition(":")
    if sep and head in TRANSFORMS:
        return TRANSFORMS[head](get_problem(rest))
    raise UnknownProblem(f"unknown problem {name!r}")
