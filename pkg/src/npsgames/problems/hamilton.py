"""Hamiltonian paths and cycles, and the travelling salesperson decision problem."""

from __future__ import annotations

from typing import Any, Iterator, Mapping

from ..core import ProblemSpec
from ..errors import DecodeError
from .payloads import (
    Graph,
    PathInstance,
    TourInstance,
    _int,
    _require,
    decode_graph,
    encode_graph,
)


def _successors(g: Graph, mask: int) -> dict[int, int] | None:
    """Unique successor per vertex along the chosen arcs, or None on a branching."""
    succ: dict[int, int] = {}
    for i, (u, v) in enumerate(g.edges):
        if mask >> i & 1:
            if u in succ:
                return None
            succ[u] = v
    return succ


def verify_dham_path(p: PathInstance, mask: int) -> bool:
    g = p.graph
    if mask.bit_count() != g.n - 1:
        return False
    succ = _successors(g, mask)
    if succ is None:
        return False
    u, seen = p.s, 1 << p.s
    for _ in range(g.n - 1):
        if u not in succ:
            return False
        u = succ[u]
        if seen >> u & 1:
            return False
        seen |= 1 << u
    return u == p.t


def verify_dham_cycle(g: Graph, mask: int) -> bool:
    if g.n < 2 or mask.bit_count() != g.n:
        return False
    succ = _successors(g, mask)
    if succ is None:
        return False
    u, seen = 0, 0
    for _ in range(g.n):
        if u not in succ or seen >> u & 1:
            return False
        seen |= 1 << u
        u = succ[u]
    return u == 0


def verify_uham_cycle(g: Graph, mask: int) -> bool:
    if g.n < 3 or mask.bit_count() != g.n:
        return False
    adj: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(g.edges):
        if mask >> i & 1:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    if len(adj) != g.n or any(len(x) != 2 for x in adj.values()):
        return False
    prev, u, steps = -1, 0, 0
    while True:
        a, b = adj[u]
        nxt = b if a == prev else a
        prev, u = u, nxt
        steps += 1
        if u == 0:
            return steps == g.n


def verify_tsp(p: TourInstance, mask: int) -> bool:
    g = p.graph
    weight = sum(g.weight(i) for i in range(len(g.edges)) if mask >> i & 1)
    return verify_uham_cycle(g, mask) and weight <= p.t


def _out_arcs(g: Graph) -> list[list[tuple[int, int]]]:
    out: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        out[u].append((v, i))
        if not g.directed:
            out[v].append((u, i))
    return out


def _dham_paths(p: PathInstance, cap: int) -> Iterator[int]:
    g = p.graph
    if g.n == 1:
        if p.s == p.t:
            yield 0
        return
    out = _out_arcs(g)
    last = g.n - 1

    def walk(u: int, seen: int, arcs: int, depth: int) -> Iterator[int]:
        if depth == last:
            yield arcs
            return
        for v, i in out[u]:
            if seen >> v & 1 or (v == p.t) != (depth + 1 == last):
                continue
            yield from walk(v, seen | 1 << v, arcs | 1 << i, depth + 1)

    if p.s != p.t:
        yield from walk(p.s, 1 << p.s, 0, 0)


def _cycles(g: Graph, limit: int | None = None) -> Iterator[int]:
    """Hamiltonian cycles through vertex 0, each produced once.

    For undirected graphs the orientation is fixed by requiring the first
    vertex after 0 to have a smaller id than the last one.  With ``limit``
    and non-negative weights, partial tours heavier than the limit are cut.
    """
    need = 2 if g.directed else 3
    if g.n < need:
        return
    out = _out_arcs(g)
    prune = limit is not None and all(g.weight(i) >= 0 for i in range(len(g.edges)))

    def walk(u: int, seen: int, arcs: int, depth: int, first: int, w: int) -> Iterator[int]:
        if prune and w > limit:
            return
        if depth == g.n - 1:
            for v, i in out[u]:
                if v == 0 and (g.directed or first < u):
                    yield arcs | 1 << i
            return
        for v, i in out[u]:
            if seen >> v & 1:
                continue
            yield from walk(v, seen | 1 << v, arcs | 1 << i, depth + 1,
                            v if depth == 0 else first, w + g.weight(i))

    yield from walk(0, 1, 0, 0, -1, 0)


def _tours(p: TourInstance, cap: int) -> Iterator[int]:
    g = p.graph
    for tour in _cycles(g, p.t):
        if sum(g.weight(i) for i in range(len(g.edges)) if tour >> i & 1) <= p.t:
            yield tour


def decode_path(doc: Mapping[str, Any]) -> PathInstance:
    return PathInstance(
        decode_graph(_require(doc, "graph"), directed=True),
        _int(_require(doc, "s"), "s"),
        _int(_require(doc, "t"), "t"),
    )


def decode_tour(doc: Mapping[str, Any]) -> TourInstance:
    g = decode_graph(_require(doc, "graph"), directed=False)
    if len(g.edges) != g.n * (g.n - 1) // 2:
        raise DecodeError("a travelling salesperson instance needs a complete graph")
    if g.weights is None:
        raise DecodeError("a travelling salesperson instance needs edge weights")
    return TourInstance(g, _int(_require(doc, "t"), "t"))


def _edge_labels(g: Graph) -> list[str]:
    return [g.label(i) for i in range(len(g.edges))]


DHAM_PATH = ProblemSpec(
    "dham-path", lambda p: _edge_labels(p.graph), verify_dham_path, decode_path,
    lambda p: {"graph": encode_graph(p.graph), "s": p.s, "t": p.t},
    enumerate=_dham_paths, summary="directed Hamiltonian s-t path",
)
DHAM_CYCLE = ProblemSpec(
    "dham-cycle", _edge_labels, verify_dham_cycle,
    lambda d: decode_graph(_require(d, "graph"), directed=True),
    lambda g: {"graph": encode_graph(g)},
    enumerate=lambda g, cap: _cycles(g), summary="directed Hamiltonian cycle",
)
UHAM_CYCLE = ProblemSpec(
    "uham-cycle", _edge_labels, verify_uham_cycle,
    lambda d: decode_graph(_require(d, "graph"), directed=False),
    lambda g: {"graph": encode_graph(g)},
    enumerate=lambda g, cap: _cycles(g), summary="undirected Hamiltonian cycle",
)
TSP = ProblemSpec(
    "tsp", lambda p: _edge_labels(p.graph), verify_tsp, decode_tour,
    lambda p: {"graph": encode_graph(p.graph), "t": p.t},
    enumerate=_tours, summary="Hamiltonian tour of weight at most t in a complete graph",
)
