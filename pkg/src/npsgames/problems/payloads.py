"""Instance payloads and their JSON codecs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Mapping, Sequence

from ..errors import DecodeError

INT64_MAX = 2**63 - 1


def _require(doc: Mapping[str, Any], key: str) -> Any:
    try:
        return doc[key]
    except (KeyError, TypeError):
        raise DecodeError(f"missing field {key!r}") from None


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DecodeError(f"{what} must be an integer, got {value!r}")
    return value


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, (list, tuple)):
        raise DecodeError(f"{what} must be a list")
    return [_int(v, what) for v in value]


def check_sum_fits(values: Sequence[int], what: str) -> None:
    if sum(abs(v) for v in values) > INT64_MAX:
        raise DecodeError(f"{what}: magnitudes overflow signed 64-bit sums")


# -- CNF ---------------------------------------------------------------------


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise DecodeError("a formula needs at least one variable")
        for clause in self.clauses:
            if not clause:
                raise DecodeError("empty clause")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise DecodeError(f"literal {lit} out of range 1..{self.num_vars}")

    @cached_property
    def var_masks(self) -> tuple[tuple[int, int], ...]:
        """Per clause, (positive-variable mask, negated-variable mask)."""
        out = []
        for clause in self.clauses:
            pos = neg = 0
            for lit in clause:
                if lit > 0:
                    pos |= 1 << (lit - 1)
                else:
                    neg |= 1 << (-lit - 1)
            out.append((pos, neg))
        return tuple(out)

    @cached_property
    def literal_masks(self) -> tuple[int, ...]:
        """Per clause, mask over the literal universe l1..ln, ~l1..~ln."""
        n = self.num_vars
        out = []
        for clause in self.clauses:
            m = 0
            for lit in clause:
                m |= 1 << (lit - 1 if lit > 0 else n - lit - 1)
            out.append(m)
        return tuple(out)

    def max_clause_len(self) -> int:
        return max((len(c) for c in self.clauses), default=0)


def literal_id(lit: int, num_vars: int) -> int:
    """Universe id of a signed literal in the literal-based ordering."""
    return lit - 1 if lit > 0 else num_vars - lit - 1


def decode_cnf(doc: Mapping[str, Any]) -> CnfFormula:
    if isinstance(doc, Mapping) and "dimacs" in doc:
        from .dimacs import parse_dimacs

        return parse_dimacs(doc["dimacs"])
    n = _int(_require(doc, "num_vars"), "num_vars")
    raw = _require(doc, "clauses")
    if not isinstance(raw, list):
        raise DecodeError("clauses must be a list")
    return CnfFormula(n, tuple(tuple(_int_list(c, "literal")) for c in raw))


def encode_cnf(phi: CnfFormula) -> dict:
    return {"num_vars": phi.num_vars, "clauses": [list(c) for c in phi.clauses]}


# -- graphs ------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    directed: bool = False
    weights: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DecodeError("negative vertex count")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DecodeError(f"edge ({u},{v}) out of range")
            if u == v:
                raise DecodeError("self-loops are not allowed")
            if not self.directed and u > v:
                raise DecodeError("undirected edges are stored with the smaller endpoint first")
            if (u, v) in seen:
                raise DecodeError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
        if self.weights is not None:
            if len(self.weights) != len(self.edges):
                raise DecodeError("one weight per edge required")
            check_sum_fits(self.weights, "edge weights")

    @staticmethod
    def build(
        n: int,
        edges: Sequence[Sequence[int]],
        directed: bool = False,
        weights: Sequence[int] | None = None,
    ) -> "Graph":
        """Normalise undirected endpoints before construction."""
        norm = []
        for u, v in edges:
            if not directed and u > v:
                u, v = v, u
            norm.append((u, v))
        return Graph(n, tuple(norm), directed, None if weights is None else tuple(weights))

    def weight(self, i: int) -> int:
        return 1 if self.weights is None else self.weights[i]

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        if not self.directed and u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    @cached_property
    def neighbours(self) -> tuple[int, ...]:
        """Undirected neighbourhood mask per vertex (arcs count both ways)."""
        nb = [0] * self.n
        for u, v in self.edges:
            nb[u] |= 1 << v
            nb[v] |= 1 << u
        return tuple(nb)

    def label(self, i: int) -> str:
        u, v = self.edges[i]
        return f"{u}>{v}" if self.directed else f"{u}-{v}"


def decode_graph(doc: Mapping[str, Any], directed: bool | None = None) -> Graph:
    n = _int(_require(doc, "n"), "n")
    is_directed = bool(doc.get("directed", False))
    if directed is not None and is_directed != directed:
        raise DecodeError(f"expected a {'directed' if directed else 'undirected'} graph")
    raw = _require(doc, "edges")
    if not isinstance(raw, list):
        raise DecodeError("edges must be a list")
    edges, weights = [], []
    for e in raw:
        e = _int_list(e, "edge entry")
        if len(e) not in (2, 3):
            raise DecodeError(f"edge entry {e} must be [u, v] or [u, v, w]")
        edges.append(e[:2])
        weights.append(e[2] if len(e) == 3 else None)
    has_w = [w is not None for w in weights]
    if any(has_w) and not all(has_w):
        raise DecodeError("either every edge carries a weight or none does")
    return Graph.build(n, edges, is_directed, weights if all(has_w) and weights else None)


def encode_graph(g: Graph) -> dict:
    edges = [[u, v] if g.weights is None else [u, v, g.weights[i]] for i, (u, v) in enumerate(g.edges)]
    return {"n": g.n, "directed": g.directed, "edges": edges}


# -- number sets -------------------------------------------------------------


@dataclass(frozen=True)
class NumberSet:
    """Positive integers with problem-specific thresholds.

    ``target`` is M for subset sum and T for scheduling.  Knapsack keeps its
    weights in ``values`` and uses ``profits``, ``capacity`` and ``min_profit``.
    """

    values: tuple[int, ...]
    target: int | None = None
    profits: tuple[int, ...] | None = None
    capacity: int | None = None
    min_profit: int | None = None

    def __post_init__(self) -> None:
        if any(v < 1 for v in self.values):
            raise DecodeError("number set values must be positive")
        for name in ("target", "capacity", "min_profit"):
            t = getattr(self, name)
            if t is not None and t < 0:
                raise DecodeError(f"{name} must be non-negative")
        if self.profits is not None:
            if len(self.profits) != len(self.values) or any(p < 1 for p in self.profits):
                raise DecodeError("profits must be positive, one per object")
            check_sum_fits(self.profits, "profits")
        check_sum_fits(self.values, "values")


def decode_numbers(doc: Mapping[str, Any], fields: Sequence[str]) -> NumberSet:
    values = tuple(_int_list(_require(doc, "values"), "value"))
    kwargs: dict[str, Any] = {}
    for name in fields:
        if name == "profits":
            kwargs[name] = tuple(_int_list(_require(doc, name), "profit"))
        else:
            kwargs[name] = _int(_require(doc, name), name)
    return NumberSet(values, **kwargs)


def encode_numbers(ns: NumberSet) -> dict:
    out: dict[str, Any] = {"values": list(ns.values)}
    for name in ("target", "capacity", "min_profit"):
        if getattr(ns, name) is not None:
            out[name] = getattr(ns, name)
    if ns.profits is not None:
        out["profits"] = list(ns.profits)
    return out


# -- facility location -------------------------------------------------------


@dataclass(frozen=True)
class FacilityInstance:
    """Facilities 0..n-1 serving clients 0..m-1.

    ``open_cost`` is used by UFL only, ``p`` by p-center and p-median only;
    ``k`` is the cost threshold in all three.
    """

    service_cost: tuple[tuple[int, ...], ...]
    k: int
    open_cost: tuple[int, ...] | None = None
    p: int | None = None

    def __post_init__(self) -> None:
        widths = {len(row) for row in self.service_cost}
        if len(widths) > 1:
            raise DecodeError("service cost rows must have equal length")
        if self.open_cost is not None and len(self.open_cost) != len(self.service_cost):
            raise DecodeError("one opening cost per facility required")
        flat = [c for row in self.service_cost for c in row]
        check_sum_fits(flat + list(self.open_cost or ()), "facility costs")

    @property
    def facilities(self) -> int:
        return len(self.service_cost)

    @property
    def clients(self) -> int:
        return len(self.service_cost[0]) if self.service_cost else 0


def decode_facility(doc: Mapping[str, Any], kind: str) -> FacilityInstance:
    raw = _require(doc, "service_cost")
    if not isinstance(raw, list):
        raise DecodeError("service_cost must be a list of rows")
    rows = tuple(tuple(_int_list(r, "service cost")) for r in raw)
    k = _int(_require(doc, "k"), "k")
    if kind == "ufl":
        return FacilityInstance(rows, k, open_cost=tuple(_int_list(_require(doc, "open_cost"), "open cost")))
    return FacilityInstance(rows, k, p=_int(_require(doc, "p"), "p"))


def encode_facility(fi: FacilityInstance) -> dict:
    out: dict[str, Any] = {"service_cost": [list(r) for r in fi.service_cost], "k": fi.k}
    if fi.open_cost is not None:
        out["open_cost"] = list(fi.open_cost)
    if fi.p is not None:
        out["p"] = fi.p
    return out


# -- small wrappers ------------------------------------------------------------


@dataclass(frozen=True)
class GraphK:
    """A graph with an integer size threshold."""

    graph: Graph
    k: int


@dataclass(frozen=True)
class SetSystem:
    """Ground set 0..size-1 and a family of subsets of it, with threshold k."""

    size: int
    sets: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self) -> None:
        for s in self.sets:
            if any(not 0 <= x < self.size for x in s):
                raise DecodeError("set element outside the ground set")


@dataclass(frozen=True)
class PathInstance:
    graph: Graph
    s: int
    t: int

    def __post_init__(self) -> None:
        if not (0 <= self.s < self.graph.n and 0 <= self.t < self.graph.n):
            raise DecodeError("path endpoints out of range")


@dataclass(frozen=True)
class TourInstance:
    graph: Graph
    t: int


@dataclass(frozen=True)
class SteinerInstance:
    graph: Graph
    terminals: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if not self.terminals:
            raise DecodeError("a Steiner instance needs at least one terminal")
        if any(not 0 <= x < self.graph.n for x in self.terminals):
            raise DecodeError("terminal out of range")
        if len(set(self.terminals)) != len(self.terminals):
            raise DecodeError("duplicate terminal")
