"""Reductions out of vertex cover, and the independent set / clique branch."""

from __future__ import annotations

from ..core import SEReduction
from ..problems.cycles import FAS, FVS
from ..problems.facility import P_CENTER, P_MEDIAN, UFL
from ..problems.graphs import (
    CLIQUE_E,
    CLIQUE_V,
    DOMINATING_SET,
    HITTING_SET,
    INDEPENDENT_SET,
    SET_COVER,
    VERTEX_COVER,
)
from ..problems.payloads import FacilityInstance, Graph, GraphK, SetSystem


def _identity(n: int) -> list[int]:
    return list(range(n))


def _to_dominating_set(p: GraphK) -> tuple[GraphK, list[int]]:
    """Every edge gets ``k'+1`` private dominators adjacent to both endpoints.

    Isolated vertices are dominated by a hub that is itself forced into every
    small dominating set by ``k'+1`` pendants; the hub costs one unit of
    budget, so ``k'`` grows by one in that case.
    """
    g = p.graph
    k = min(p.k, g.n)
    degree = [0] * g.n
    for u, v in g.edges:
        degree[u] += 1
        degree[v] += 1
    isolated = [v for v in range(g.n) if degree[v] == 0]
    budget = k + 1 if isolated else k
    copies = max(budget + 1, 0)
    edges = list(g.edges)
    count = g.n
    for u, v in g.edges:
        for _ in range(copies):
            edges += [(u, count), (v, count)]
            count += 1
    if isolated:
        hub = count
        count += 1
        edges += [(v, hub) for v in isolated]
        for _ in range(copies):
            edges.append((hub, count))
            count += 1
    return GraphK(Graph.build(count, edges), budget), _identity(g.n)


def _to_set_cover(p: GraphK) -> tuple[SetSystem, list[int]]:
    g = p.graph
    sets = tuple(tuple(i for i, e in enumerate(g.edges) if v in e) for v in range(g.n))
    return SetSystem(len(g.edges), sets, p.k), _identity(g.n)


def _to_hitting_set(p: GraphK) -> tuple[SetSystem, list[int]]:
    g = p.graph
    return SetSystem(g.n, tuple(g.edges), p.k), _identity(g.n)


def _to_fvs(p: GraphK) -> tuple[GraphK, list[int]]:
    g = p.graph
    arcs = [a for u, v in g.edges for a in ((u, v), (v, u))]
    return GraphK(Graph.build(g.n, arcs, directed=True), p.k), _identity(g.n)


def _to_fas(p: GraphK) -> tuple[GraphK, list[int]]:
    """Vertex ``v`` becomes the arc ``v -> n+v``; each edge direction gets ``n+1`` two-arc paths."""
    g = p.graph
    n = g.n
    arcs = [(v, n + v) for v in range(n)]
    count = 2 * n
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            for _ in range(n + 1):
                arcs += [(n + a, count), (count, b)]
                count += 1
    return GraphK(Graph.build(count, arcs, directed=True), min(p.k, n)), _identity(n)


def _incidence_costs(g: Graph) -> tuple[tuple[int, ...], ...]:
    far = g.n + 1
    return tuple(tuple(0 if v in e else far for e in g.edges) for v in range(g.n))


def _to_ufl(p: GraphK) -> tuple[FacilityInstance, list[int]]:
    g = p.graph
    fi = FacilityInstance(_incidence_costs(g), min(p.k, g.n), open_cost=(1,) * g.n)
    return fi, _identity(g.n)


def _to_p_center(p: GraphK) -> tuple[FacilityInstance, list[int]]:
    return FacilityInstance(_incidence_costs(p.graph), 0, p=p.k), _identity(p.graph.n)


def _to_clique_v(p: GraphK) -> tuple[GraphK, list[int]]:
    g = p.graph
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    return GraphK(Graph.build(g.n, edges), p.k), _identity(g.n)


def _to_clique_e(p: GraphK) -> tuple[GraphK, list[int]]:
    """Vertex ``v`` gets a twin ``n+v``; spouse edges come first, then four copies per edge."""
    g = p.graph
    n = g.n
    edges = [(v, n + v) for v in range(n)]
    for u, v in g.edges:
        edges += [(u, v), (n + u, v), (u, n + v), (n + u, n + v)]
    return GraphK(Graph.build(2 * n, edges), 2 * p.k), _identity(n)


VC_TO_DOMINATING_SET = SEReduction("vertex-cover>dominating-set", VERTEX_COVER, DOMINATING_SET, _to_dominating_set)
VC_TO_SET_COVER = SEReduction("vertex-cover>set-cover", VERTEX_COVER, SET_COVER, _to_set_cover)
VC_TO_HITTING_SET = SEReduction("vertex-cover>hitting-set", VERTEX_COVER, HITTING_SET, _to_hitting_set)
VC_TO_FVS = SEReduction("vertex-cover>fvs", VERTEX_COVER, FVS, _to_fvs)
VC_TO_FAS = SEReduction("vertex-cover>fas", VERTEX_COVER, FAS, _to_fas)
VC_TO_UFL = SEReduction("vertex-cover>ufl", VERTEX_COVER, UFL, _to_ufl)
VC_TO_P_CENTER = SEReduction("vertex-cover>p-center", VERTEX_COVER, P_CENTER, _to_p_center)
VC_TO_P_MEDIAN = SEReduction("vertex-cover>p-median", VERTEX_COVER, P_MEDIAN, _to_p_center)
IS_TO_CLIQUE_V = SEReduction("independent-set>clique-v", INDEPENDENT_SET, CLIQUE_V, _to_clique_v)
CLIQUE_V_TO_CLIQUE_E = SEReduction("clique-v>clique-e", CLIQUE_V, CLIQUE_E, _to_clique_e)
