"""Problems with explicit universes, solution enumeration and SE reductions."""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

import numpy as np

from . import bits
from .errors import (
    CapExceeded,
    EmbeddingNotInjective,
    NotNested,
    SpecMismatch,
    WidthMismatch,
)

DEFAULT_CAP = 24

Verifier = Callable[[Any, int], bool]
BatchVerifier = Callable[[Any, np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class ProblemSpec:
    """A decision problem whose solutions are subsets of an instance universe.

    ``verify`` is the reference verifier.  ``verify_batch`` is an optional
    vectorised twin over uint64 mask arrays, ``size_bounds`` an optional
    guarantee on solution cardinality, and ``enumerate`` an optional
    structured enumerator ``(payload, cap) -> masks`` for problems whose
    power set is hopeless but whose solutions are easy to walk.
    Identity is nominal: two specs are equal when their names are.
    """

    name: str
    labels: Callable[[Any], Sequence[str]]
    verify: Verifier
    decode: Callable[[Mapping[str, Any]], Any]
    encode: Callable[[Any], dict]
    literal_based: bool = False
    verify_batch: BatchVerifier | None = None
    size_bounds: Callable[[Any], tuple[int, int]] | None = None
    enumerate: Callable[[Any, int], Iterable[int]] | None = None
    summary: str = ""

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ProblemSpec) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"ProblemSpec({self.name!r})"


@dataclass(frozen=True, eq=False)
class InstanceBundle:
    problem: ProblemSpec
    payload: Any
    labels: tuple[str, ...]

    @classmethod
    def of(cls, problem: ProblemSpec, payload: Any) -> "InstanceBundle":
        labels = tuple(problem.labels(payload))
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate universe labels in {problem.name} instance")
        return cls(problem, payload, labels)

    @property
    def width(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return bits.full_mask(self.width)

    def names(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits.bit_ids(mask)]

    def mask_of(self, names: Iterable[str]) -> int:
        index = {label: i for i, label in enumerate(self.labels)}
        return bits.from_ids(index[n] for n in names)

    def document(self) -> dict:
        return {"problem": self.problem.name, "payload": self.problem.encode(self.payload)}

    def digest(self) -> str:
        text = json.dumps(self.document(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode()).hexdigest()[:16]


def check_width(inst: InstanceBundle, mask: int) -> None:
    if mask < 0 or mask >> inst.width:
        raise WidthMismatch(f"mask {mask:#x} exceeds universe of width {inst.width}")


def is_solution(inst: InstanceBundle, mask: int) -> bool:
    check_width(inst, mask)
    return bool(inst.problem.verify(inst.payload, mask))


def _np_span(free: int) -> np.ndarray:
    """All submasks of ``free`` as a uint64 array (not sorted)."""
    out = np.zeros(1, dtype=np.uint64)
    for p in bits.bit_ids(free):
        out = np.concatenate([out, out | np.uint64(1 << p)])
    return out


def _filter_batch(inst: InstanceBundle, masks: np.ndarray, lo: int, hi: int) -> np.ndarray:
    """The solutions among ``masks`` (a uint64 array), order preserved."""
    if lo > 0 or hi < inst.width:
        sizes = bits.np_popcount(masks)
        masks = masks[(sizes >= lo) & (sizes <= hi)]
    if masks.size == 0:
        return masks
    batch = inst.problem.verify_batch
    if batch is not None:
        return masks[np.asarray(batch(inst.payload, masks), dtype=bool)]
    verify = inst.problem.verify
    keep = np.fromiter((verify(inst.payload, int(m)) for m in masks), dtype=bool, count=masks.size)
    return masks[keep]


def _scan_ints(inst: InstanceBundle, masks: Iterable[int]) -> list[int]:
    verify = inst.problem.verify
    return [m for m in masks if verify(inst.payload, m)]


def _scan_arrays(inst: InstanceBundle, cap: int, threads: int) -> list[np.ndarray] | None:
    """Solutions as uint64 arrays for universes of at most 64 elements, else None."""
    problem = inst.problem
    n = inst.width
    if n > 64:
        return None
    lo, hi = problem.size_bounds(inst.payload) if problem.size_bounds else (0, n)
    lo, hi = max(lo, 0), min(hi, n)
    if lo > hi:
        return []
    if n <= cap:
        chunks = list(bits.power_set_chunks(n))
        if threads > 1 and len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                return list(pool.map(lambda c: _filter_batch(inst, c, lo, hi), chunks))
        return [_filter_batch(inst, c, lo, hi) for c in chunks]
    if bits.bounded_count(n, lo, hi) > 1 << cap:
        raise CapExceeded(f"{problem.name}: universe of {n} elements exceeds cap {cap}")
    out, buffer = [], []
    for m in bits.iter_bounded(n, lo, hi):
        buffer.append(m)
        if len(buffer) == 1 << 16:
            out.append(_filter_batch(inst, np.array(buffer, dtype=np.uint64), 0, n))
            buffer = []
    if buffer:
        out.append(_filter_batch(inst, np.array(buffer, dtype=np.uint64), 0, n))
    return out


def solution_array(inst: InstanceBundle, cap: int = DEFAULT_CAP, threads: int = 1) -> np.ndarray:
    """Every solution as a sorted uint64 array; universes of at most 64 elements only."""
    if inst.width > 64:
        raise CapExceeded(f"{inst.problem.name}: {inst.width} elements do not fit a uint64 mask")
    if inst.problem.enumerate is not None:
        found = sorted(set(inst.problem.enumerate(inst.payload, cap)))
        return np.array(found, dtype=np.uint64)
    parts = _scan_arrays(inst, cap, threads)
    assert parts is not None
    if not parts:
        return np.zeros(0, dtype=np.uint64)
    return np.sort(np.concatenate(parts))


def enumerate_solutions(
    inst: InstanceBundle, cap: int = DEFAULT_CAP, threads: int = 1
) -> tuple[int, ...]:
    """Every solution mask of ``inst`` in increasing order.

    Problems with a structured enumerator use it.  Otherwise the power set
    is scanned when ``width <= cap``; with a cardinality guarantee the scan
    is restricted to subsets of admissible size, provided their number is at
    most ``2**cap``.
    """
    problem = inst.problem
    if problem.enumerate is not None:
        return tuple(sorted(set(problem.enumerate(inst.payload, cap))))
    if inst.width <= 64:
        return tuple(int(m) for m in solution_array(inst, cap, threads))
    n = inst.width
    lo, hi = problem.size_bounds(inst.payload) if problem.size_bounds else (0, n)
    if n <= cap:
        candidates: Iterable[int] = range(1 << n)
    elif bits.bounded_count(n, lo, hi) <= 1 << cap:
        candidates = bits.iter_bounded(n, lo, hi)
    else:
        raise CapExceeded(f"{problem.name}: universe of {n} elements exceeds cap {cap}")
    found = [m for m in _scan_ints(inst, candidates) if lo <= m.bit_count() <= hi]
    return tuple(sorted(found))


def is_partial_solution(
    inst: InstanceBundle,
    chosen: int,
    decided: int,
    cap: int = DEFAULT_CAP,
    solutions: Sequence[int] | None = None,
) -> bool:
    """Whether ``chosen`` extends to a solution using only elements outside ``decided``."""
    check_width(inst, chosen)
    check_width(inst, decided)
    if chosen & ~decided:
        raise NotNested("chosen set is not inside the decided set")
    if solutions is None and inst.problem.enumerate is not None:
        solutions = enumerate_solutions(inst, cap)
    if solutions is not None:
        return any(s & decided == chosen for s in solutions)
    free = inst.full & ~decided
    if free.bit_count() > cap:
        raise CapExceeded(f"{free.bit_count()} undecided elements exceed cap {cap}")
    if inst.width <= 64:
        candidates = _np_span(free) | np.uint64(chosen)
        return bool(_filter_batch(inst, candidates, 0, inst.width).size)
    return any(inst.problem.verify(inst.payload, chosen | x) for x in bits.submasks(free))


@dataclass(frozen=True)
class CoveringReport:
    covering: bool
    vacuous: bool
    union: int


def universe_covering_report(inst: InstanceBundle, cap: int = DEFAULT_CAP) -> CoveringReport:
    union = 0
    sols = enumerate_solutions(inst, cap)
    for s in sols:
        union |= s
    return CoveringReport(not sols or union == inst.full, not sols, union)


def is_universe_covering(inst: InstanceBundle, cap: int = DEFAULT_CAP) -> bool:
    return universe_covering_report(inst, cap).covering


@dataclass(frozen=True)
class Embedding:
    """Element map from a source universe into a target universe, as an id table."""

    table: tuple[int, ...]
    target_width: int

    def __post_init__(self) -> None:
        if len(set(self.table)) != len(self.table):
            raise EmbeddingNotInjective("two source elements share a target element")
        if any(t < 0 or t >= self.target_width for t in self.table):
            raise EmbeddingNotInjective("embedding leaves the target universe")

    @property
    def source_width(self) -> int:
        return len(self.table)

    @property
    def embedded(self) -> int:
        return bits.from_ids(self.table)

    @property
    def auxiliary(self) -> int:
        return bits.full_mask(self.target_width) & ~self.embedded

    def image(self, mask: int) -> int:
        return bits.image(mask, self.table)

    def preimage(self, mask: int) -> int:
        out = 0
        for i, t in enumerate(self.table):
            if mask >> t & 1:
                out |= 1 << i
        return out

    def then(self, other: "Embedding") -> "Embedding":
        """First this map, then ``other``."""
        return Embedding(tuple(other.table[t] for t in self.table), other.target_width)


@dataclass(frozen=True)
class Reduced:
    source: InstanceBundle
    target: InstanceBundle
    embedding: Embedding


@dataclass(frozen=True, eq=False)
class SEReduction:
    """A map ``g`` on payloads together with the per-instance element map ``f``.

    ``construct(payload)`` returns the target payload and the id table of
    the embedding, so both halves come from a single construction.
    """

    name: str
    source: ProblemSpec
    target: ProblemSpec
    construct: Callable[[Any], tuple[Any, Sequence[int]]]

    def map_instance(self, payload: Any) -> Any:
        return self.construct(payload)[0]

    def apply(self, inst: InstanceBundle) -> Reduced:
        if inst.problem != self.source:
            raise SpecMismatch(f"{self.name} expects {self.source.name}, got {inst.problem.name}")
        payload, table = self.construct(inst.payload)
        target = InstanceBundle.of(self.target, payload)
        if len(table) != inst.width:
            raise EmbeddingNotInjective(
                f"{self.name}: embedding covers {len(table)} of {inst.width} elements"
            )
        return Reduced(inst, target, Embedding(tuple(table), target.width))

    def embed(self, inst: InstanceBundle, element: int) -> int:
        return self.apply(inst).embedding.table[element]


def identity_reduction(problem: ProblemSpec) -> SEReduction:
    def construct(payload: Any) -> tuple[Any, list[int]]:
        return payload, list(range(len(problem.labels(payload))))

    return SEReduction(f"{problem.name}>{problem.name}", problem, problem, construct)


def compose(first: SEReduction, second: SEReduction) -> SEReduction:
    """``second`` after ``first``: instance maps chain, element maps chain per instance."""
    if first.target != second.source:
        raise SpecMismatch(f"cannot chain {first.name} into {second.name}")

    def construct(payload: Any) -> tuple[Any, list[int]]:
        mid, inner = first.construct(payload)
        out, outer = second.construct(mid)
        return out, [outer[t] for t in inner]

    tail = second.name.split(">", 1)[1]
    return SEReduction(f"{first.name}>{tail}", first.source, second.target, construct)


@dataclass(frozen=True)
class SECheckReport:
    reduction: str
    source_digest: str
    target_digest: str
    source_solutions: int
    target_solutions: int
    embedded_images: tuple[int, ...]
    restricted_targets: tuple[int, ...]
    missing: tuple[int, ...]
    extra: tuple[int, ...]
    yes_iff_yes: bool
    target_labels: tuple[str, ...] = field(repr=False, default=())

    @property
    def equal(self) -> bool:
        return not self.missing and not self.extra

    @property
    def passed(self) -> bool:
        return self.equal and self.yes_iff_yes

    def to_dict(self, witnesses: int = 3) -> dict:
        def names(mask: int) -> list[str]:
            return sorted(self.target_labels[i] for i in bits.bit_ids(mask))

        return {
            "reduction": self.reduction,
            "source": self.source_digest,
            "target": self.target_digest,
            "source_solutions": self.source_solutions,
            "target_solutions": self.target_solutions,
            "restricted_per_side": [len(self.embedded_images), len(self.restricted_targets)],
            "set_equality": self.equal,
            "yes_iff_yes": self.yes_iff_yes,
            "passed": self.passed,
            "missing_from_target": [names(m) for m in self.missing[:witnesses]],
            "extra_in_target": [names(m) for m in self.extra[:witnesses]],
        }


def check_se_property(
    red: SEReduction, inst: InstanceBundle, cap: int = DEFAULT_CAP, threads: int = 1
) -> SECheckReport:
    reduced = red.apply(inst)
    src = enumerate_solutions(inst, cap, threads)
    tgt = enumerate_solutions(reduced.target, cap, threads)
    emb = reduced.embedding
    left = {emb.image(s) for s in src}
    keep = emb.embedded
    right = {t & keep for t in tgt}
    return SECheckReport(
        reduction=red.name,
        source_digest=inst.digest(),
        target_digest=reduced.target.digest(),
        source_solutions=len(src),
        target_solutions=len(tgt),
        embedded_images=tuple(sorted(left)),
        restricted_targets=tuple(sorted(right)),
        missing=tuple(sorted(left - right)),
        extra=tuple(sorted(right - left)),
        yes_iff_yes=bool(src) == bool(tgt),
        target_labels=reduced.target.labels,
    )
