"""Seeded random instances for the fuzz suites.

Every generator takes a ``random.Random`` and keyword size limits, and
returns a payload of the named problem.  About half of the instances are
built around a planted solution so that yes-instances are well represented.
"""

from __future__ import annotations

import random
from typing import Any, Callable

from .problems.payloads import CnfFormula, Graph, GraphK, NumberSet, PathInstance


def random_cnf(rng: random.Random, max_vars: int = 4, max_clauses: int = 3, max_len: int = 3,
               min_vars: int = 1) -> CnfFormula:
    n = rng.randint(min_vars, max_vars)
    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        size = rng.randint(1, min(max_len, n))
        chosen = rng.sample(range(1, n + 1), size)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in chosen))
    return CnfFormula(n, tuple(clauses))


def random_graph(rng: random.Random, n: int, density: float, directed: bool = False) -> Graph:
    if directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.build(n, [e for e in pairs if rng.random() < density], directed)


def random_graph_k(rng: random.Random, max_vertices: int = 6, min_vertices: int = 1) -> GraphK:
    n = rng.randint(min_vertices, max_vertices)
    return GraphK(random_graph(rng, n, rng.choice([0.3, 0.5, 0.7])), rng.randint(0, n))


def random_subset_sum(rng: random.Random, max_items: int = 8, max_value: int = 12) -> NumberSet:
    values = tuple(rng.randint(1, max_value) for _ in range(rng.randint(1, max_items)))
    if rng.random() < 0.5:
        target = sum(v for v in values if rng.random() < 0.5)
    else:
        target = rng.randint(0, sum(values) + 2)
    return NumberSet(values, target=target)


def random_partition(rng: random.Random, max_items: int = 8, max_value: int = 12) -> NumberSet:
    values = [rng.randint(1, max_value) for _ in range(rng.randint(1, max_items))]
    if rng.random() < 0.5 and len(values) >= 2:
        # plant a balanced split: adjust the last number so both halves agree
        side = [rng.random() < 0.5 for _ in values]
        side[0] = True
        if all(side[:-1]):
            side[-1] = False
        gap = sum(v for v, s in zip(values, side) if s) - sum(v for v, s in zip(values, side) if not s)
        last = values[-1] + (gap if not side[-1] else -gap)
        if last >= 1:
            values[-1] = last
    return NumberSet(tuple(values))


def _planted_arcs(rng: random.Random, order: list[int], closed: bool) -> list[tuple[int, int]]:
    arcs = list(zip(order, order[1:]))
    if closed:
        arcs.append((order[-1], order[0]))
    return arcs


def random_dham_path(rng: random.Random, max_vertices: int = 6) -> PathInstance:
    n = rng.randint(2, max_vertices)
    g = random_graph(rng, n, rng.choice([0.2, 0.35, 0.5]), directed=True)
    arcs = set(g.edges)
    s, t = rng.sample(range(n), 2)
    if rng.random() < 0.5:
        middle = [v for v in range(n) if v not in (s, t)]
        rng.shuffle(middle)
        arcs.update(_planted_arcs(rng, [s, *middle, t], closed=False))
    return PathInstance(Graph.build(n, sorted(arcs), directed=True), s, t)


def random_ham_graph(rng: random.Random, max_vertices: int, directed: bool, min_vertices: int = 2) -> Graph:
    n = rng.randint(min_vertices, max_vertices)
    g = random_graph(rng, n, rng.choice([0.2, 0.35, 0.5]), directed)
    edges = set(g.edges)
    if rng.random() < 0.5:
        order = list(range(n))
        rng.shuffle(order)
        for u, v in _planted_arcs(rng, order, closed=True):
            if u != v:
                edges.add((u, v) if directed or u < v else (v, u))
    return Graph.build(n, sorted(edges), directed)


Generator = Callable[[random.Random], Any]


def _within(rng: random.Random, make: Generator, size: Callable[[Any], int], limit: int) -> Any:
    """Resample until the universe has at most ``limit`` elements."""
    while True:
        out = make(rng)
        if size(out) <= limit:
            return out

# Default source generators, keyed by problem name.
SOURCES: dict[str, Generator] = {
    "sat-l": lambda r: random_cnf(r, max_vars=6, max_clauses=4, max_len=5),
    "sat-v": lambda r: random_cnf(r, max_vars=8, max_clauses=5, max_len=4),
    "3sat-l": lambda r: random_cnf(r, max_vars=4, max_clauses=3, max_len=3),
    "vertex-cover": lambda r: random_graph_k(r, max_vertices=6),
    "independent-set": lambda r: random_graph_k(r, max_vertices=8),
    "clique-v": lambda r: random_graph_k(r, max_vertices=5),
    "subset-sum": lambda r: random_subset_sum(r),
    "partition": lambda r: random_partition(r),
    "dham-path": lambda r: _within(r, lambda q: random_dham_path(q, max_vertices=6), lambda p: len(p.graph.edges), 16),
    "dham-cycle": lambda r: _within(r, lambda q: random_ham_graph(q, 5, directed=True), lambda g: len(g.edges), 16),
    # The TSP target is a complete graph, so the source stays at 12 edges.
    "uham-cycle": lambda r: _within(
        r, lambda q: random_ham_graph(q, 7, directed=False, min_vertices=3), lambda g: len(g.edges), 12
    ),
}

# Smaller sources for edges whose targets grow quickly.
EDGE_SOURCES: dict[str, Generator] = {
    "3sat-l>dham-path": lambda r: random_cnf(r, max_vars=3, max_clauses=2, max_len=3),
    "3sat-l>steiner-tree": lambda r: random_cnf(r, max_vars=3, max_clauses=2, max_len=3),
    "vertex-cover>dominating-set": lambda r: random_graph_k(r, max_vertices=5),
    "vertex-cover>fas": lambda r: random_graph_k(r, max_vertices=4),
}


def source_generator(edge: str) -> Generator:
    return EDGE_SOURCES.get(edge) or SOURCES[edge.split(">", 1)[0]]


# -- games ------------------------------------------------------------------------


def random_parts(rng: random.Random, width: int, k: int) -> tuple[int, ...]:
    """Random ordered partition of ``range(width)`` into ``k`` parts (some may be empty)."""
    parts = [0] * k
    for e in range(width):
        parts[rng.randrange(k)] |= 1 << e
    return tuple(parts)


def random_selection_game(rng: random.Random, base: Any, k: int) -> Any:
    from .games import SelectionGame

    return SelectionGame(base, random_parts(rng, base.width, k))


def random_interdiction_game(rng: random.Random, base: Any, k: int, local: bool = False) -> Any:
    """Nested access sets grown from random parts, budgets at most 2."""
    from .games import InterdictionGame

    nested = []
    reach = 0
    for part in random_parts(rng, base.width, k)[: k - 1]:
        reach |= part
        nested.append(reach)
    return InterdictionGame(
        base, tuple(nested), rng.randint(0, 2), rng.randint(0, 2), "local" if local else "global"
    )


def random_adjustable_game(rng: random.Random, base: Any, k: int) -> Any:
    from .games import AdjustableGame

    stages = random_parts(rng, base.width, k)
    later = base.full & ~stages[0]
    vulnerable = sum(1 << e for e in range(base.width) if later >> e & 1 and rng.random() < 0.6)
    return AdjustableGame(base, stages, vulnerable, rng.randint(0, 2))


def random_sat_selection(rng: random.Random, k: int, n: int, max_clauses: int = 3) -> Any:
    """Selection game on SAT-V with ``k`` parts of exactly ``n`` variables each."""
    from .core import InstanceBundle
    from .games import SelectionGame
    from .problems.registry import get_problem

    phi = random_cnf(rng, max_vars=k * n, max_clauses=max_clauses, max_len=3, min_vars=k * n)
    order = list(range(k * n))
    rng.shuffle(order)
    parts = tuple(sum(1 << v for v in order[i * n:(i + 1) * n]) for i in range(k))
    return SelectionGame(InstanceBundle.of(get_problem("sat-v"), phi), parts)
