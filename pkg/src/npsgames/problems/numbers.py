"""Subset sum, knapsack, partition and two-machine scheduling."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .. import bits
from ..core import ProblemSpec
from .payloads import NumberSet, decode_numbers, encode_numbers


def _sum(values: Sequence[int], mask: int) -> int:
    return sum(values[i] for i in bits.bit_ids(mask))


def _sum_batch(values: Sequence[int], masks: np.ndarray) -> np.ndarray:
    total = np.zeros(masks.size, dtype=np.int64)
    for i, v in enumerate(values):
        total += np.where((masks >> np.uint64(i)) & np.uint64(1) == 1, np.int64(v), np.int64(0))
    return total


def verify_subset_sum(ns: NumberSet, mask: int) -> bool:
    return _sum(ns.values, mask) == ns.target


def verify_knapsack(ns: NumberSet, mask: int) -> bool:
    assert ns.profits is not None
    return _sum(ns.values, mask) <= ns.capacity and _sum(ns.profits, mask) >= ns.min_profit


def verify_partition(ns: NumberSet, mask: int) -> bool:
    """The first number must be on the chosen side; both sides sum equally."""
    return bool(mask & 1) and 2 * _sum(ns.values, mask) == sum(ns.values)


def verify_partition_free(ns: NumberSet, mask: int) -> bool:
    return 2 * _sum(ns.values, mask) == sum(ns.values)


def verify_scheduling(ns: NumberSet, mask: int) -> bool:
    """Job 1 runs on the first machine; both machines finish by the deadline."""
    first = _sum(ns.values, mask)
    return bool(mask & 1) and first <= ns.target and sum(ns.values) - first <= ns.target


def _subset_sum_batch(ns: NumberSet, masks: np.ndarray) -> np.ndarray:
    return _sum_batch(ns.values, masks) == ns.target


def _knapsack_batch(ns: NumberSet, masks: np.ndarray) -> np.ndarray:
    assert ns.profits is not None
    return (_sum_batch(ns.values, masks) <= ns.capacity) & (
        _sum_batch(ns.profits, masks) >= ns.min_profit
    )


def _partition_batch(ns: NumberSet, masks: np.ndarray) -> np.ndarray:
    return ((masks & np.uint64(1)) == 1) & (2 * _sum_batch(ns.values, masks) == sum(ns.values))


def _partition_free_batch(ns: NumberSet, masks: np.ndarray) -> np.ndarray:
    return 2 * _sum_batch(ns.values, masks) == sum(ns.values)


def _scheduling_batch(ns: NumberSet, masks: np.ndarray) -> np.ndarray:
    first = _sum_batch(ns.values, masks)
    total = sum(ns.values)
    return ((masks & np.uint64(1)) == 1) & (first <= ns.target) & (total - first <= ns.target)


def _labels(prefix: str):
    return lambda ns: [f"{prefix}{i}" for i in range(len(ns.values))]


SUBSET_SUM = ProblemSpec(
    "subset-sum", _labels("a"), verify_subset_sum,
    lambda d: decode_numbers(d, ["target"]), encode_numbers,
    verify_batch=_subset_sum_batch, summary="numbers summing exactly to the target",
)
KNAPSACK = ProblemSpec(
    "knapsack", _labels("o"), verify_knapsack,
    lambda d: decode_numbers(d, ["profits", "capacity", "min_profit"]), encode_numbers,
    verify_batch=_knapsack_batch, summary="weight within capacity, profit at least the bound",
)
PARTITION = ProblemSpec(
    "partition", _labels("a"), verify_partition,
    lambda d: decode_numbers(d, []), encode_numbers,
    verify_batch=_partition_batch, summary="equal-sum halves, the first number on the chosen side",
)
PARTITION_FREE = ProblemSpec(
    "partition-1", _labels("a"), verify_partition_free,
    lambda d: decode_numbers(d, []), encode_numbers,
    verify_batch=_partition_free_batch, summary="equal-sum halves, no anchoring",
)
SCHEDULING = ProblemSpec(
    "scheduling", _labels("j"), verify_scheduling,
    lambda d: decode_numbers(d, ["target"]), encode_numbers,
    verify_batch=_scheduling_batch, summary="two machines, both done by the deadline, job 1 on machine 1",
)
