"""Reductions among the number problems."""

from __future__ import annotations

from ..core import SEReduction
from ..problems.numbers import KNAPSACK, PARTITION, SCHEDULING, SUBSET_SUM
from ..problems.payloads import NumberSet


def _to_knapsack(ns: NumberSet) -> tuple[NumberSet, list[int]]:
    assert ns.target is not None
    out = NumberSet(ns.values, profits=ns.values, capacity=ns.target, min_profit=ns.target)
    return out, list(range(len(ns.values)))


def _to_partition(ns: NumberSet) -> tuple[NumberSet, list[int]]:
    """Two anchors in front; the anchored side holds the subset summing to ``M``.

    With ``M`` above the total no subset qualifies, and the anchors are
    chosen to make the overall sum odd.
    """
    assert ns.target is not None
    total, m = sum(ns.values), ns.target
    anchors = (total + 1 - m, m + 1) if m <= total else (1, total + 2)
    return NumberSet(anchors + ns.values), [i + 2 for i in range(len(ns.values))]


def _to_scheduling(ns: NumberSet) -> tuple[NumberSet, list[int]]:
    # An odd total rounds the deadline down, so neither side has a solution.
    return NumberSet(ns.values, target=sum(ns.values) // 2), list(range(len(ns.values)))


SUBSET_SUM_TO_KNAPSACK = SEReduction("subset-sum>knapsack", SUBSET_SUM, KNAPSACK, _to_knapsack)
SUBSET_SUM_TO_PARTITION = SEReduction("subset-sum>partition", SUBSET_SUM, PARTITION, _to_partition)
PARTITION_TO_SCHEDULING = SEReduction("partition>scheduling", PARTITION, SCHEDULING, _to_scheduling)
