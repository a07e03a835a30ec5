"""Uncapacitated facility location, p-center and p-median."""

from __future__ import annotations

import numpy as np

from .. import bits
from ..core import ProblemSpec
from .payloads import FacilityInstance, decode_facility, encode_facility

_NO_SERVICE = np.iinfo(np.int64).max


def _service(fi: FacilityInstance, mask: int) -> list[int] | None:
    """Cheapest open facility per client; None when clients exist but nothing is open."""
    chosen = bits.bit_ids(mask)
    if not chosen:
        return None if fi.clients else []
    return [min(fi.service_cost[i][j] for i in chosen) for j in range(fi.clients)]


def verify_ufl(fi: FacilityInstance, mask: int) -> bool:
    best = _service(fi, mask)
    if best is None:
        return False
    assert fi.open_cost is not None
    return sum(fi.open_cost[i] for i in bits.bit_ids(mask)) + sum(best) <= fi.k


def verify_p_center(fi: FacilityInstance, mask: int) -> bool:
    best = _service(fi, mask)
    return best is not None and mask.bit_count() <= fi.p and max(best, default=fi.k) <= fi.k


def verify_p_median(fi: FacilityInstance, mask: int) -> bool:
    best = _service(fi, mask)
    return best is not None and mask.bit_count() <= fi.p and sum(best) <= fi.k


def _service_batch(fi: FacilityInstance, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-mask array of client costs (shape batch x clients) and an 'anything open' flag."""
    picked = [(masks >> np.uint64(i)) & np.uint64(1) == 1 for i in range(fi.facilities)]
    best = np.full((masks.size, fi.clients), _NO_SERVICE, dtype=np.int64)
    for i, sel in enumerate(picked):
        row = np.asarray(fi.service_cost[i], dtype=np.int64)
        best = np.where(sel[:, None], np.minimum(best, row[None, :]), best)
    any_open = masks != 0
    return best, any_open


def _ufl_batch(fi: FacilityInstance, masks: np.ndarray) -> np.ndarray:
    best, any_open = _service_batch(fi, masks)
    total = np.zeros(masks.size, dtype=np.int64)
    assert fi.open_cost is not None
    for i, c in enumerate(fi.open_cost):
        total += np.where((masks >> np.uint64(i)) & np.uint64(1) == 1, c, 0)
    if fi.clients:
        total = total + np.where(any_open, best.sum(axis=1, where=any_open[:, None]), 0)
        return any_open & (total <= fi.k)
    return total <= fi.k


def _p_center_batch(fi: FacilityInstance, masks: np.ndarray) -> np.ndarray:
    ok = bits.np_popcount(masks) <= fi.p
    if not fi.clients:
        return ok
    best, any_open = _service_batch(fi, masks)
    return ok & any_open & (best.max(axis=1) <= fi.k)


def _p_median_batch(fi: FacilityInstance, masks: np.ndarray) -> np.ndarray:
    ok = bits.np_popcount(masks) <= fi.p
    if not fi.clients:
        return ok & (0 <= fi.k)
    best, any_open = _service_batch(fi, masks)
    safe = np.where(any_open[:, None], best, 0)
    return ok & any_open & (safe.sum(axis=1) <= fi.k)


def _ufl_bounds(fi: FacilityInstance) -> tuple[int, int]:
    assert fi.open_cost is not None
    flat = [c for row in fi.service_cost for c in row]
    cheapest = min(fi.open_cost, default=1)
    if cheapest >= 1 and min(flat, default=0) >= 0:
        return 0, fi.k // cheapest
    return 0, fi.facilities


def _labels(fi: FacilityInstance) -> list[str]:
    return [f"f{i}" for i in range(fi.facilities)]


UFL = ProblemSpec(
    "ufl", _labels, verify_ufl, lambda d: decode_facility(d, "ufl"), encode_facility,
    verify_batch=_ufl_batch, size_bounds=_ufl_bounds,
    summary="opening plus service cost at most k",
)
P_CENTER = ProblemSpec(
    "p-center", _labels, verify_p_center, lambda d: decode_facility(d, "p"), encode_facility,
    verify_batch=_p_center_batch, size_bounds=lambda fi: (0, fi.p),
    summary="at most p facilities, worst client cost at most k",
)
P_MEDIAN = ProblemSpec(
    "p-median", _labels, verify_p_median, lambda d: decode_facility(d, "p"), encode_facility,
    verify_batch=_p_median_batch, size_bounds=lambda fi: (0, fi.p),
    summary="at most p facilities, total client cost at most k",
)
