"""Steiner tree in graphs with non-negative edge costs."""

from __future__ import annotations

from collections import deque
from typing import Any, Iterator, Mapping

from .. import bits
from ..core import ProblemSpec
from ..errors import DecodeError
from .payloads import SteinerInstance, _int, _int_list, _require, decode_graph, encode_graph


def verify_steiner_tree(p: SteinerInstance, mask: int) -> bool:
    """A tree (connected, acyclic) touching every terminal, with cost at most k."""
    g = p.graph
    chosen = bits.bit_ids(mask)
    if sum(g.weight(i) for i in chosen) > p.k:
        return False
    if not chosen:
        return len(p.terminals) <= 1
    adj: dict[int, list[int]] = {}
    for i in chosen:
        u, v = g.edges[i]
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if len(adj) != len(chosen) + 1 or any(t not in adj for t in p.terminals):
        return False
    start = next(iter(adj))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(adj)


def _distances(p: SteinerInstance) -> list[list[float]]:
    """All-pairs shortest path costs (Floyd-Warshall)."""
    g = p.graph
    inf = float("inf")
    d = [[0.0 if i == j else inf for j in range(g.n)] for i in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        w = g.weight(i)
        d[u][v] = d[v][u] = min(d[u][v], w)
    for m in range(g.n):
        dm = d[m]
        for i in range(g.n):
            dim = d[i][m]
            if dim == inf:
                continue
            di = d[i]
            for j in range(g.n):
                if dim + dm[j] < di[j]:
                    di[j] = dim + dm[j]
    return d


def _steiner_trees(p: SteinerInstance, cap: int) -> Iterator[int]:
    """Grow every tree containing the first terminal within the cost budget.

    The frontier of incident edges is scanned in order and each edge is
    either taken or banned for the rest of the branch, so each tree appears
    once.  A branch stops when some terminal is farther from the tree than
    the remaining budget.
    """
    g = p.graph
    dist = _distances(p)
    root = p.terminals[0]
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)

    def hopeless(verts: int, spent: int) -> bool:
        room = p.k - spent
        members = bits.bit_ids(verts)
        for t in p.terminals:
            if not verts >> t & 1 and min(dist[m][t] for m in members) > room:
                return True
        return False

    def walk(verts: int, edges: int, spent: int, frontier: tuple[int, ...]) -> Iterator[int]:
        if spent > p.k or hopeless(verts, spent):
            return
        if all(verts >> t & 1 for t in p.terminals):
            yield edges
        for pos, e in enumerate(frontier):
            u, v = g.edges[e]
            new = v if verts >> u & 1 else u
            if verts >> new & 1:
                continue
            later = tuple(x for x in frontier[pos + 1:] if not (verts | 1 << new) >> _other(g, x, verts) & 1)
            extra = tuple(x for x in incident[new] if x != e and not (verts >> _far(g, x, new) & 1))
            yield from walk(verts | 1 << new, edges | 1 << e, spent + g.weight(e), later + extra)

    start = tuple(incident[root])
    yield from walk(1 << root, 0, 0, start)


def _far(g, edge: int, near: int) -> int:
    u, v = g.edges[edge]
    return v if u == near else u


def _other(g, edge: int, verts: int) -> int:
    """Endpoint of a frontier edge outside the current tree."""
    u, v = g.edges[edge]
    return v if verts >> u & 1 else u


def decode_steiner(doc: Mapping[str, Any]) -> SteinerInstance:
    g = decode_graph(_require(doc, "graph"), directed=False)
    if g.weights is not None and any(w < 0 for w in g.weights):
        raise DecodeError("Steiner edge costs must be non-negative")
    return SteinerInstance(
        g, tuple(_int_list(_require(doc, "terminals"), "terminal")), _int(_require(doc, "k"), "k")
    )


STEINER_TREE = ProblemSpec(
    "steiner-tree",
    lambda p: [p.graph.label(i) for i in range(len(p.graph.edges))],
    verify_steiner_tree,
    decode_steiner,
    lambda p: {"graph": encode_graph(p.graph), "terminals": list(p.terminals), "k": p.k},
    enumerate=_steiner_trees,
    summary="tree of cost at most k spanning all terminals",
)
