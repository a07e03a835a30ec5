"""Hamiltonian path to cycle to undirected cycle to travelling salesperson."""

from __future__ import annotations

from ..core import SEReduction
from ..problems.hamilton import DHAM_CYCLE, DHAM_PATH, TSP, UHAM_CYCLE
from ..problems.payloads import Graph, PathInstance, TourInstance


def _path_to_cycle(p: PathInstance) -> tuple[Graph, list[int]]:
    """A fresh vertex ``x`` with arcs ``t -> x -> s`` closes every s-t path.

    Every Hamiltonian cycle must pass through ``x``, so dropping ``x`` leaves
    a Hamiltonian s-t path.
    """
    g = p.graph
    x = g.n
    arcs = list(g.edges) + [(p.t, x), (x, p.s)]
    return Graph.build(g.n + 1, arcs, directed=True), list(range(len(g.edges)))


def _directed_to_undirected(g: Graph) -> tuple[Graph, list[int]]:
    """Vertex ``v`` becomes ``v`` (in), ``n+v`` (middle), ``2n+v`` (out).

    Arc ``u -> v`` becomes the connector edge from ``2n+u`` to ``v``;
    connectors come first in arc order, then the internal edges.
    """
    n = g.n
    edges = [(2 * n + u, v) for u, v in g.edges]
    for v in range(n):
        edges += [(v, n + v), (n + v, 2 * n + v)]
    return Graph.build(3 * n, edges), list(range(len(g.edges)))


def _to_tsp(g: Graph) -> tuple[TourInstance, list[int]]:
    """Complete the graph: original edges weigh 0 and come first, the rest weigh 1."""
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    edges = list(g.edges) + missing
    weights = [0] * len(g.edges) + [1] * len(missing)
    return TourInstance(Graph.build(g.n, edges, weights=weights), 0), list(range(len(g.edges)))


DHAM_PATH_TO_CYCLE = SEReduction("dham-path>dham-cycle", DHAM_PATH, DHAM_CYCLE, _path_to_cycle)
DHAM_CYCLE_TO_UHAM_CYCLE = SEReduction("dham-cycle>uham-cycle", DHAM_CYCLE, UHAM_CYCLE, _directed_to_undirected)
UHAM_CYCLE_TO_TSP = SEReduction("uham-cycle>tsp", UHAM_CYCLE, TSP, _to_tsp)
