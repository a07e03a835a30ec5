"""Model transforms: complement-based, literal-based and dual problems."""

from __future__ import annotations

from typing import Any, Iterator

import numpy as np

from .. import bits
from ..core import ProblemSpec
from ..errors import ModelPreconditionViolated


def _bar(label: str) -> str:
    return label[1:] if label.startswith("~") else "~" + label


def complement_model(base: ProblemSpec) -> ProblemSpec:
    """Same instances; element ``u`` is renamed to its complement ``~u``.

    A set of barred elements is a solution exactly when the unbarred set is
    one, so masks carry over unchanged and only the labels differ.
    """
    if base.literal_based:
        raise ModelPreconditionViolated(f"{base.name} is literal-based; complements need a variable universe")
    return ProblemSpec(
        f"complement:{base.name}",
        lambda p: [_bar(x) for x in base.labels(p)],
        base.verify,
        base.decode,
        base.encode,
        verify_batch=base.verify_batch,
        size_bounds=base.size_bounds,
        enumerate=base.enumerate,
        summary=f"{base.name} with every element read as its complement",
    )


def literal_model(base: ProblemSpec) -> ProblemSpec:
    """Universe ``U`` followed by ``~U``; each solution records both chosen and unchosen elements."""
    if base.literal_based:
        raise ModelPreconditionViolated(f"{base.name} is already literal-based")

    def width(p: Any) -> int:
        return len(base.labels(p))

    def labels(p: Any) -> list[str]:
        plain = list(base.labels(p))
        return plain + [_bar(x) for x in plain]

    def verify(p: Any, mask: int) -> bool:
        n = width(p)
        full = bits.full_mask(n)
        low, high = mask & full, mask >> n
        return low ^ high == full and base.verify(p, low)

    def verify_batch(p: Any, masks: np.ndarray) -> np.ndarray:
        n = width(p)
        full = np.uint64(bits.full_mask(n))
        low, high = masks & full, masks >> np.uint64(n)
        ok = (low ^ high) == full
        assert base.verify_batch is not None
        return ok & np.asarray(base.verify_batch(p, low), dtype=bool)

    def solutions(p: Any, cap: int) -> Iterator[int]:
        from ..core import InstanceBundle, enumerate_solutions

        n = width(p)
        full = bits.full_mask(n)
        for s in enumerate_solutions(InstanceBundle.of(base, p), cap):
            yield s | (full & ~s) << n

    return ProblemSpec(
        f"literal:{base.name}",
        labels,
        verify,
        base.decode,
        base.encode,
        literal_based=True,
        verify_batch=verify_batch if base.verify_batch is not None else None,
        enumerate=solutions,
        summary=f"{base.name} over elements and their complements",
    )


def dual_model(base: ProblemSpec) -> ProblemSpec:
    """Same universe; ``S`` is a solution when its complement solves the base problem."""
    if not base.literal_based:
        raise ModelPreconditionViolated(f"{base.name} is not literal-based; its dual is undefined")

    def verify(p: Any, mask: int) -> bool:
        return base.verify(p, bits.full_mask(len(base.labels(p))) ^ mask)

    def verify_batch(p: Any, masks: np.ndarray) -> np.ndarray:
        assert base.verify_batch is not None
        return base.verify_batch(p, masks ^ np.uint64(bits.full_mask(len(base.labels(p)))))

    def solutions(p: Any, cap: int) -> Iterator[int]:
        from ..core import InstanceBundle, enumerate_solutions

        full = bits.full_mask(len(base.labels(p)))
        for s in enumerate_solutions(InstanceBundle.of(base, p), cap):
            yield full ^ s

    return ProblemSpec(
        f"dual:{base.name}",
        base.labels,
        verify,
        base.decode,
        base.encode,
        literal_based=True,
        verify_batch=verify_batch if base.verify_batch is not None else None,
        enumerate=solutions,
        summary=f"complements of {base.name} solutions",
    )
