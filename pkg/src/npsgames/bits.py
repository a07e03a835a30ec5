"""Subset masks as Python ints, plus numpy batch helpers.

Bit ``i`` of a mask is set when universe element ``i`` belongs to the subset.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

import numpy as np

# Width of one numpy batch when scanning the full power set.
CHUNK_BITS = 20


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(width: int) -> int:
    return (1 << width) - 1


def bit_ids(mask: int) -> list[int]:
    """Ids of the set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_ids(ids: Iterable[int]) -> int:
    mask = 0
    for i in ids:
        mask |= 1 << i
    return mask


@lru_cache(maxsize=4096)
def submasks(mask: int) -> tuple[int, ...]:
    """All submasks of ``mask`` in increasing integer order."""
    positions = bit_ids(mask)
    out = [0]
    # Doubling over bits from the lowest keeps the list sorted.
    for p in positions:
        bit = 1 << p
        out += [m | bit for m in out]
    return tuple(sorted(out))


def submasks_upto(mask: int, limit: int) -> tuple[int, ...]:
    """Submasks of ``mask`` with at most ``limit`` bits, increasing order."""
    return tuple(m for m in submasks(mask) if m.bit_count() <= limit)


def bounded_count(width: int, low: int, high: int) -> int:
    """Number of subsets of a ``width``-set with size in ``[low, high]``."""
    low = max(low, 0)
    high = min(high, width)
    return sum(comb(width, i) for i in range(low, high + 1))


def iter_bounded(width: int, low: int, high: int) -> Iterator[int]:
    """Masks over ``width`` bits whose size lies in ``[low, high]`` (unsorted)."""
    for size in range(max(low, 0), min(high, width) + 1):
        for combo in combinations(range(width), size):
            yield from_ids(combo)


def image(mask: int, table: tuple[int, ...]) -> int:
    """Map every set bit ``i`` to bit ``table[i]``."""
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << table[low.bit_length() - 1]
        mask ^= low
    return out


def np_popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr)


def power_set_chunks(width: int, chunk_bits: int = CHUNK_BITS) -> Iterator[np.ndarray]:
    """Yield every mask over ``width`` bits as uint64 arrays, ascending."""
    total = 1 << width
    step = 1 << chunk_bits
    for start in range(0, total, step):
        yield np.arange(start, min(total, start + step), dtype=np.uint64)
