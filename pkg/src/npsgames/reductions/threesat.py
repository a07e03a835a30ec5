"""Reductions out of literal-based 3-satisfiability.

Literal ``l_i`` has universe id ``i-1`` and ``~l_i`` has id ``n+i-1``;
every construction below numbers its literal gadgets the same way so that
the embedding is the identity on the first ``2n`` target ids.
"""

from __future__ import annotations

from ..core import SEReduction
from ..problems.graphs import INDEPENDENT_SET, VERTEX_COVER
from ..problems.hamilton import DHAM_PATH
from ..problems.numbers import SUBSET_SUM
from ..problems.payloads import (
    CnfFormula,
    Graph,
    GraphK,
    NumberSet,
    PathInstance,
    SteinerInstance,
    literal_id,
)
from ..problems.sat import THREE_SAT_L
from ..problems.steiner import STEINER_TREE


def _padded(clause: tuple[int, ...]) -> tuple[int, int, int]:
    return tuple((list(clause) * 3)[:3])  # type: ignore[return-value]


def _literal_skeleton(phi: CnfFormula) -> tuple[int, list[tuple[int, int]]]:
    n = phi.num_vars
    return 2 * n, [(i, n + i) for i in range(n)]


def _to_vertex_cover(phi: CnfFormula) -> tuple[GraphK, list[int]]:
    """Literal pairs, one triangle per clause, each corner tied to its literal."""
    n = phi.num_vars
    count, edges = _literal_skeleton(phi)
    for clause in phi.clauses:
        corners = [count, count + 1, count + 2]
        count += 3
        edges += [(corners[0], corners[1]), (corners[0], corners[2]), (corners[1], corners[2])]
        for corner, lit in zip(corners, _padded(clause)):
            edges.append((literal_id(lit, n), corner))
    k = n + 2 * len(phi.clauses)
    return GraphK(Graph.build(count, edges), k), list(range(2 * n))


def _to_independent_set(phi: CnfFormula) -> tuple[GraphK, list[int]]:
    """As for vertex cover, but each corner is tied to the opposite literal."""
    n = phi.num_vars
    count, edges = _literal_skeleton(phi)
    for clause in phi.clauses:
        corners = [count, count + 1, count + 2]
        count += 3
        edges += [(corners[0], corners[1]), (corners[0], corners[2]), (corners[1], corners[2])]
        for corner, lit in zip(corners, _padded(clause)):
            edges.append((literal_id(-lit, n), corner))
    return GraphK(Graph.build(count, edges), n + len(phi.clauses)), list(range(2 * n))


def _to_subset_sum(phi: CnfFormula) -> tuple[NumberSet, list[int]]:
    """Base-10 digit table: variable columns first, then one column per clause.

    Column sums never exceed 5, so no carries occur.
    """
    n, m = phi.num_vars, len(phi.clauses)
    clause_sets = [set(c) for c in phi.clauses]

    def literal_number(lit: int) -> int:
        var = abs(lit) - 1
        value = 10 ** (m + n - 1 - var)
        for j, members in enumerate(clause_sets):
            if lit in members:
                value += 10 ** (m - 1 - j)
        return value

    values = [literal_number(i) for i in range(1, n + 1)]
    values += [literal_number(-i) for i in range(1, n + 1)]
    for j in range(m):
        values += [10 ** (m - 1 - j)] * 2
    target = sum(10 ** (m + n - 1 - v) for v in range(n)) + sum(3 * 10 ** (m - 1 - j) for j in range(m))
    return NumberSet(tuple(values), target=target), list(range(2 * n))


def _to_dham_path(phi: CnfFormula) -> tuple[PathInstance, list[int]]:
    """One bidirectional row per variable, walked left to right when it is true.

    Vertices: junctions ``a_1..a_{n+1}``, rows of ``3m+2`` vertices each,
    then one vertex per clause.  The first ``2n`` arcs enter each row from
    the left (literal ``l_i``) or from the right (``~l_i``).
    """
    n, m = phi.num_vars, len(phi.clauses)
    width = 3 * m + 2
    last = width - 1

    def junction(i: int) -> int:
        return i

    def row(i: int, p: int) -> int:
        return n + 1 + i * width + p

    def clause_vertex(j: int) -> int:
        return n + 1 + n * width + j

    arcs = [(junction(i), row(i, 0)) for i in range(n)]
    arcs += [(junction(i), row(i, last)) for i in range(n)]
    for i in range(n):
        arcs += [(row(i, last), junction(i + 1)), (row(i, 0), junction(i + 1))]
        for p in range(last):
            arcs += [(row(i, p), row(i, p + 1)), (row(i, p + 1), row(i, p))]
    for j, clause in enumerate(phi.clauses):
        c = clause_vertex(j)
        for lit in dict.fromkeys(clause):
            i = abs(lit) - 1
            left, right = row(i, 3 * j + 1), row(i, 3 * j + 2)
            if lit > 0:
                arcs += [(left, c), (c, right)]
            else:
                arcs += [(right, c), (c, left)]
    g = Graph.build(clause_vertex(m), arcs, directed=True)
    return PathInstance(g, junction(0), junction(n)), list(range(2 * n))


def _to_steiner_tree(phi: CnfFormula) -> tuple[SteinerInstance, list[int]]:
    """Diamond chain from ``s`` to ``t`` through the literal vertices.

    Each clause terminal hangs off each of its literals by a path of
    ``2n+1`` unit edges.  The first ``2n`` edges join ``v_{i-1}`` to the
    literal vertices of variable ``i``.
    """
    n, m = phi.num_vars, len(phi.clauses)
    # vertex ids: v_0 = s, v_1..v_{n-1}, v_n = t, then literals, then clause terminals
    def chain(i: int) -> int:
        return i

    def literal_vertex(lit_id: int) -> int:
        return n + 1 + lit_id

    def clause_vertex(j: int) -> int:
        return 3 * n + 1 + j

    count = 3 * n + 1 + m
    edges = [(chain(i), literal_vertex(i)) for i in range(n)]
    edges += [(chain(i), literal_vertex(n + i)) for i in range(n)]
    for i in range(n):
        edges += [(literal_vertex(i), chain(i + 1)), (literal_vertex(n + i), chain(i + 1))]
    length = 2 * n + 1
    for j, clause in enumerate(phi.clauses):
        for lit in dict.fromkeys(clause):
            prev = clause_vertex(j)
            for _ in range(length - 1):
                edges.append((prev, count))
                prev = count
                count += 1
            edges.append((prev, literal_vertex(literal_id(lit, n))))
    terminals = (chain(0), chain(n)) + tuple(clause_vertex(j) for j in range(m))
    k = 2 * n + m * length
    return SteinerInstance(Graph.build(count, edges), terminals, k), list(range(2 * n))


THREESAT_TO_VERTEX_COVER = SEReduction("3sat-l>vertex-cover", THREE_SAT_L, VERTEX_COVER, _to_vertex_cover)
THREESAT_TO_INDEPENDENT_SET = SEReduction(
    "3sat-l>independent-set", THREE_SAT_L, INDEPENDENT_SET, _to_independent_set
)
THREESAT_TO_SUBSET_SUM = SEReduction("3sat-l>subset-sum", THREE_SAT_L, SUBSET_SUM, _to_subset_sum)
THREESAT_TO_DHAM_PATH = SEReduction("3sat-l>dham-path", THREE_SAT_L, DHAM_PATH, _to_dham_path)
THREESAT_TO_STEINER_TREE = SEReduction("3sat-l>steiner-tree", THREE_SAT_L, STEINER_TREE, _to_steiner_tree)
