"""Covering, packing and clique problems on undirected graphs and set systems."""

from __future__ import annotations

from typing import Any, Iterator, Mapping

import numpy as np

from .. import bits
from ..core import ProblemSpec
from ..errors import DecodeError
from .payloads import (
    Graph,
    GraphK,
    SetSystem,
    _int,
    _int_list,
    _require,
    decode_graph,
    encode_graph,
)


def decode_graph_k(doc: Mapping[str, Any]) -> GraphK:
    return GraphK(decode_graph(_require(doc, "graph"), directed=False), _int(_require(doc, "k"), "k"))


def encode_graph_k(p: GraphK) -> dict:
    return {"graph": encode_graph(p.graph), "k": p.k}


def vertex_labels(p: GraphK) -> list[str]:
    return [f"v{i}" for i in range(p.graph.n)]


def edge_labels(p: GraphK) -> list[str]:
    return [p.graph.label(i) for i in range(len(p.graph.edges))]


def _edge_masks(g: Graph) -> list[int]:
    return [1 << u | 1 << v for u, v in g.edges]


def _non_edge_masks(g: Graph) -> list[int]:
    return [
        1 << u | 1 << v
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]


def _size(masks: np.ndarray) -> np.ndarray:
    return bits.np_popcount(masks).astype(np.int64)


# -- vertex cover / independent set / clique ----------------------------------


def verify_vertex_cover(p: GraphK, mask: int) -> bool:
    return mask.bit_count() <= p.k and all(mask & e for e in _edge_masks(p.graph))


def _vc_batch(p: GraphK, masks: np.ndarray) -> np.ndarray:
    ok = _size(masks) <= p.k
    for e in _edge_masks(p.graph):
        ok &= (masks & np.uint64(e)) != 0
    return ok


def _vertex_covers(p: GraphK, cap: int) -> Iterator[int]:
    """Decide vertices in order; leaving one out forces all of its neighbours in."""
    nb = p.graph.neighbours
    n = p.graph.n

    def walk(v: int, chosen: int, excluded: int) -> Iterator[int]:
        if chosen.bit_count() > p.k:
            return
        if v == n:
            yield chosen
            return
        bit = 1 << v
        if chosen & bit:
            yield from walk(v + 1, chosen, excluded)
            return
        if not nb[v] & excluded:
            yield from walk(v + 1, chosen | nb[v], excluded | bit)
        yield from walk(v + 1, chosen | bit, excluded)

    yield from walk(0, 0, 0)


def verify_independent_set(p: GraphK, mask: int) -> bool:
    return mask.bit_count() >= p.k and all(mask & e != e for e in _edge_masks(p.graph))


def _is_batch(p: GraphK, masks: np.ndarray) -> np.ndarray:
    ok = _size(masks) >= p.k
    for e in _edge_masks(p.graph):
        ok &= (masks & np.uint64(e)) != np.uint64(e)
    return ok


def verify_clique_v(p: GraphK, mask: int) -> bool:
    return mask.bit_count() >= p.k and all(mask & e != e for e in _non_edge_masks(p.graph))


def _clique_v_batch(p: GraphK, masks: np.ndarray) -> np.ndarray:
    ok = _size(masks) >= p.k
    for e in _non_edge_masks(p.graph):
        ok &= (masks & np.uint64(e)) != np.uint64(e)
    return ok


def _closure_rules(g: Graph) -> list[tuple[int, int, int | None]]:
    """Pairs of edges sharing an endpoint, with the id of the closing edge if present."""
    rules = []
    for i, (a, b) in enumerate(g.edges):
        for j in range(i + 1, len(g.edges)):
            c, d = g.edges[j]
            shared = {a, b} & {c, d}
            if len(shared) != 1:
                continue
            x, y = sorted(({a, b} | {c, d}) - shared)
            rules.append((i, j, g.edge_index.get((x, y))))
    return rules


def verify_clique_e(p: GraphK, mask: int) -> bool:
    """Edge sets closed under completing every pair of adjacent edges, with at least k edges."""
    if mask.bit_count() < p.k:
        return False
    for i, j, third in _closure_rules(p.graph):
        if mask >> i & 1 and mask >> j & 1 and (third is None or not mask >> third & 1):
            return False
    return True


def _clique_e_batch(p: GraphK, masks: np.ndarray) -> np.ndarray:
    ok = _size(masks) >= p.k
    for i, j, third in _closure_rules(p.graph):
        both = np.uint64(1 << i | 1 << j)
        hit = (masks & both) == both
        if third is not None:
            hit &= (masks & np.uint64(1 << third)) == 0
        ok &= ~hit
    return ok


def _cliques_with(g: Graph, v: int, pool: int) -> Iterator[int]:
    """Vertex sets of cliques containing ``v`` with the other members drawn from ``pool``."""
    nb = g.neighbours

    def grow(clique: int, cand: int) -> Iterator[int]:
        yield clique
        for u in bits.bit_ids(cand):
            # Only larger ids extend, so each clique is produced once.
            yield from grow(clique | 1 << u, cand & nb[u] & ~((2 << u) - 1))

    yield from grow(1 << v, pool & nb[v])


def _clique_e_solutions(p: GraphK, cap: int) -> Iterator[int]:
    """Closed edge sets are unions of edge sets of vertex-disjoint cliques."""
    g = p.graph
    index = g.edge_index

    def clique_edges(vs: int) -> int:
        ids = bits.bit_ids(vs)
        return bits.from_ids(index[(a, b)] for x, a in enumerate(ids) for b in ids[x + 1:])

    def walk(remaining: int, chosen: int) -> Iterator[int]:
        if not remaining:
            if chosen.bit_count() >= p.k:
                yield chosen
            return
        v = (remaining & -remaining).bit_length() - 1
        rest = remaining & ~(1 << v)
        yield from walk(rest, chosen)
        for clique in _cliques_with(g, v, rest):
            if clique.bit_count() >= 2:
                yield from walk(remaining & ~clique, chosen | clique_edges(clique))

    yield from walk(bits.full_mask(g.n), 0)


def verify_dominating_set(p: GraphK, mask: int) -> bool:
    nb = p.graph.neighbours
    return mask.bit_count() <= p.k and all(mask & (nb[v] | 1 << v) for v in range(p.graph.n))


def _ds_batch(p: GraphK, masks: np.ndarray) -> np.ndarray:
    ok = _size(masks) <= p.k
    for v, nb in enumerate(p.graph.neighbours):
        ok &= (masks & np.uint64(nb | 1 << v)) != 0
    return ok


def _upto_k(p: Any) -> tuple[int, int]:
    return 0, p.k


def _vertices_from_k(p: GraphK) -> tuple[int, int]:
    return p.k, p.graph.n


def _edges_from_k(p: GraphK) -> tuple[int, int]:
    return p.k, len(p.graph.edges)


VERTEX_COVER = ProblemSpec(
    "vertex-cover", vertex_labels, verify_vertex_cover, decode_graph_k, encode_graph_k,
    verify_batch=_vc_batch, size_bounds=_upto_k, enumerate=_vertex_covers, summary="every edge touched, at most k vertices",
)
INDEPENDENT_SET = ProblemSpec(
    "independent-set", vertex_labels, verify_independent_set, decode_graph_k, encode_graph_k,
    verify_batch=_is_batch, size_bounds=_vertices_from_k,
    summary="no edge inside, at least k vertices",
)
CLIQUE_V = ProblemSpec(
    "clique-v", vertex_labels, verify_clique_v, decode_graph_k, encode_graph_k,
    verify_batch=_clique_v_batch, size_bounds=_vertices_from_k,
    summary="pairwise adjacent vertices, at least k of them",
)
CLIQUE_E = ProblemSpec(
    "clique-e", edge_labels, verify_clique_e, decode_graph_k, encode_graph_k,
    verify_batch=_clique_e_batch, size_bounds=_edges_from_k, enumerate=_clique_e_solutions,
    summary="edge set closed under triangle completion, at least k edges",
)
DOMINATING_SET = ProblemSpec(
    "dominating-set", vertex_labels, verify_dominating_set, decode_graph_k, encode_graph_k,
    verify_batch=_ds_batch, size_bounds=_upto_k,
    summary="every vertex in or next to the set, at most k vertices",
)


# -- set systems ----------------------------------------------------------------


def decode_set_system(doc: Mapping[str, Any]) -> SetSystem:
    raw = _require(doc, "sets")
    if not isinstance(raw, list):
        raise DecodeError("sets must be a list")
    sets = tuple(tuple(_int_list(s, "set element")) for s in raw)
    return SetSystem(_int(_require(doc, "size"), "size"), sets, _int(_require(doc, "k"), "k"))


def encode_set_system(p: SetSystem) -> dict:
    return {"size": p.size, "sets": [list(s) for s in p.sets], "k": p.k}


def _covering_masks(p: SetSystem) -> list[int]:
    """Per ground element, the mask of sets that contain it."""
    cover = [0] * p.size
    for i, s in enumerate(p.sets):
        for x in s:
            cover[x] |= 1 << i
    return cover


def verify_set_cover(p: SetSystem, mask: int) -> bool:
    return mask.bit_count() <= p.k and all(mask & c for c in _covering_masks(p))


def _sc_batch(p: SetSystem, masks: np.ndarray) -> np.ndarray:
    ok = _size(masks) <= p.k
    for c in _covering_masks(p):
        ok &= (masks & np.uint64(c)) != 0
    return ok


def verify_hitting_set(p: SetSystem, mask: int) -> bool:
    return mask.bit_count() <= p.k and all(mask & bits.from_ids(s) for s in p.sets)


def _hs_batch(p: SetSystem, masks: np.ndarray) -> np.ndarray:
    ok = _size(masks) <= p.k
    for s in p.sets:
        ok &= (masks & np.uint64(bits.from_ids(s))) != 0
    return ok


SET_COVER = ProblemSpec(
    "set-cover", lambda p: [f"s{i}" for i in range(len(p.sets))], verify_set_cover,
    decode_set_system, encode_set_system, verify_batch=_sc_batch, size_bounds=_upto_k,
    summary="at most k sets whose union is the ground set",
)
HITTING_SET = ProblemSpec(
    "hitting-set", lambda p: [f"g{i}" for i in range(p.size)], verify_hitting_set,
    decode_set_system, encode_set_system, verify_batch=_hs_batch, size_bounds=_upto_k,
    summary="at most k ground elements meeting every set",
)
