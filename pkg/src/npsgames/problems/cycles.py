"""Feedback vertex set and feedback arc set on directed graphs."""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Any, Callable, Iterator, Mapping

from .. import bits
from ..core import ProblemSpec
from .payloads import Graph, GraphK, _int, _require, decode_graph, encode_graph


def decode_digraph_k(doc: Mapping[str, Any]) -> GraphK:
    return GraphK(decode_graph(_require(doc, "graph"), directed=True), _int(_require(doc, "k"), "k"))


def encode_digraph_k(p: GraphK) -> dict:
    return {"graph": encode_graph(p.graph), "k": p.k}


def _acyclic(n: int, arcs: list[tuple[int, int]], dead_vertices: int) -> bool:
    """Kahn's algorithm on the graph without ``dead_vertices``."""
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        if dead_vertices >> u & 1 or dead_vertices >> v & 1:
            continue
        out[u].append(v)
        indeg[v] += 1
    alive = [v for v in range(n) if not dead_vertices >> v & 1]
    queue = deque(v for v in alive if indeg[v] == 0)
    seen = 0
    while queue:
        u = queue.popleft()
        seen += 1
        for v in out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return seen == len(alive)


def verify_fvs(p: GraphK, mask: int) -> bool:
    return mask.bit_count() <= p.k and _acyclic(p.graph.n, list(p.graph.edges), mask)


def verify_fas(p: GraphK, mask: int) -> bool:
    kept = [a for i, a in enumerate(p.graph.edges) if not mask >> i & 1]
    return mask.bit_count() <= p.k and _acyclic(p.graph.n, kept, 0)


def _shortest_cycle(n: int, arcs: list[tuple[int, int, int]]) -> list[tuple[int, int, int]] | None:
    """Arcs ``(u, v, id)`` of a shortest cycle through the first vertex that lies on one."""
    out: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, i in arcs:
        out[u].append((v, i))
    for root in range(n):
        parent: dict[int, tuple[int, int]] = {}
        queue = deque([root])
        found = None
        while queue and found is None:
            u = queue.popleft()
            for v, i in out[u]:
                if v == root:
                    found = (u, i)
                    break
                if v not in parent:
                    parent[v] = (u, i)
                    queue.append(v)
        if found is None:
            continue
        cycle = [(found[0], root, found[1])]
        v = found[0]
        while v != root:
            u, i = parent[v]
            cycle.append((u, v, i))
            v = u
        return cycle
    return None


def _hitting_sets(
    width: int, k: int, find_cycle: Callable[[int], int | None]
) -> Iterator[int]:
    """Every set of at most ``k`` elements meeting all cycles.

    ``find_cycle(removed)`` returns the element mask of a cycle that survives
    removal, or None.  Branching on the first cycle element a solution
    contains partitions the solutions, so nothing is produced twice.
    """
    full = bits.full_mask(width)

    def walk(taken: int, banned: int) -> Iterator[int]:
        if taken.bit_count() > k:
            return
        cycle = find_cycle(taken)
        if cycle is None:
            free = bits.bit_ids(full & ~taken & ~banned)
            for size in range(k - taken.bit_count() + 1):
                for extra in combinations(free, size):
                    yield taken | bits.from_ids(extra)
            return
        earlier = 0
        for e in bits.bit_ids(cycle & ~banned):
            yield from walk(taken | 1 << e, banned | earlier)
            earlier |= 1 << e

    yield from walk(0, 0)


def _fvs_solutions(p: GraphK, cap: int) -> Iterator[int]:
    g = p.graph

    def find(removed: int) -> int | None:
        arcs = [(u, v, i) for i, (u, v) in enumerate(g.edges) if not (removed >> u & 1 or removed >> v & 1)]
        cycle = _shortest_cycle(g.n, arcs)
        return None if cycle is None else bits.from_ids(u for u, _, _ in cycle)

    return _hitting_sets(g.n, min(p.k, g.n), find)


def _fas_solutions(p: GraphK, cap: int) -> Iterator[int]:
    g = p.graph

    def find(removed: int) -> int | None:
        arcs = [(u, v, i) for i, (u, v) in enumerate(g.edges) if not removed >> i & 1]
        cycle = _shortest_cycle(g.n, arcs)
        return None if cycle is None else bits.from_ids(i for _, _, i in cycle)

    return _hitting_sets(len(g.edges), min(p.k, len(g.edges)), find)


FVS = ProblemSpec(
    "fvs", lambda p: [f"v{i}" for i in range(p.graph.n)], verify_fvs,
    decode_digraph_k, encode_digraph_k, enumerate=_fvs_solutions,
    summary="at most k vertices whose removal leaves the digraph acyclic",
)
FAS = ProblemSpec(
    "fas", lambda p: [p.graph.label(i) for i in range(len(p.graph.edges))], verify_fas,
    decode_digraph_k, encode_digraph_k, enumerate=_fas_solutions,
    summary="at most k arcs whose removal leaves the digraph acyclic",
)
