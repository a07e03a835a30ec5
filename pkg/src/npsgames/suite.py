"""Seeded acceptance suites, shared by the command line and the test harness.

Each suite returns a JSON-ready dict with a boolean ``passed``.  Reports
hold no timings, so two single-threaded runs with one seed serialize to
identical bytes.
"""

from __future__ import annotations

import itertools
import random
from typing import Any, Callable
from .core import (
    DEFAULT_CAP,
    InstanceBundle,
    check_se_property,
    enumerate_solutions,
    is_partial_solution,
    is_universe_covering,
)
from .games import (
    AdjustableGame,
    solve_adjustable,
    solve_interdiction_cost,
    solve_interdiction_simple,
    solve_two_stage_cost,
    zero_one_encoding,
)
from .games.interdiction import unit_cost_encoding
from .generators import (
    SOURCES,
    random_adjustable_game,
    random_cnf,
    random_graph_k,
    random_interdiction_game,
    random_partition,
    random_sat_selection,
    random_selection_game,
    random_subset_sum,
    source_generator,
)
from .io import dumps
from .lifting import build_adjustable_gadget, build_interdiction_gadget, gadget_pair, lift, verify_lift
from .problems.payloads import CnfFormula
from .problems.registry import get_problem
from .reductions import REDUCTIONS, parse_chain

LIFT_CHAINS = ("3sat-l>vertex-cover", "sat-v>sat-l", "subset-sum>partition")
PARTIAL_CHAINS = (
    "3sat-l>vertex-cover",
    "sat-l>sat-v",
    "vertex-cover>set-cover",
    "subset-sum>partition",
    "dham-path>dham-cycle",
)
ONE_CLAUSE = (-1, -2, 3)


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{seed}:{tag}")


def _bundle(problem: str, payload: Any) -> InstanceBundle:
    return InstanceBundle.of(get_problem(problem), payload)


def se_fuzz(seed: int = 0, count: int = 200, cap: int = DEFAULT_CAP, threads: int = 1) -> dict:
    """Every registered edge on ``count`` random sources."""
    edges = []
    for (src, dst), red in sorted(REDUCTIONS.items()):
        edge = f"{src}>{dst}"
        rng = _rng(seed, edge)
        make = source_generator(edge)
        failures = 0
        first: dict | None = None
        widths = []
        for _ in range(count):
            inst = _bundle(src, make(rng))
            widths.append(inst.width)
            report = check_se_property(red, inst, cap, threads)
            if not report.passed:
                failures += 1
                if first is None:
                    first = {"source": inst.document(), **report.to_dict()}
        entry = {"edge": edge, "instances": count, "failures": failures, "max_source_width": max(widths)}
        if first is not None:
            entry["first_failure"] = first
        edges.append(entry)
    return {
        "suite": "se-fuzz",
        "edges": edges,
        "failing_edges": [e["edge"] for e in edges if e["failures"]],
        "passed": all(e["failures"] == 0 for e in edges),
    }


def one_clause(seed: int = 0, cap: int = DEFAULT_CAP, threads: int = 1) -> dict:
    phi = CnfFormula(3, (ONE_CLAUSE,))
    inst = _bundle("3sat-l", phi)
    red = parse_chain("3sat-l>vertex-cover")
    target = red.apply(inst).target.payload
    report = check_se_property(red, inst, cap, threads)
    left, right = len(report.embedded_images), len(report.restricted_targets)
    facts = {
        "vertices": target.graph.n,
        "edges": len(target.graph.edges),
        "k": target.k,
        "restricted_per_side": [left, right],
        "set_equality": report.equal,
    }
    ok = facts["vertices"] == 9 and facts["edges"] == 9 and facts["k"] == 5 and left == right == 7 and report.passed
    return {"suite": "one-clause", **facts, "passed": ok}


def transitivity(seed: int = 0, count: int = 100, cap: int = DEFAULT_CAP, threads: int = 1) -> dict:
    red = parse_chain("sat-l>3sat-l>vertex-cover")
    rng = _rng(seed, "transitivity")
    failures = 0
    yes = 0
    for _ in range(count):
        inst = _bundle("sat-l", random_cnf(rng, max_vars=4, max_clauses=3, max_len=4))
        report = check_se_property(red, inst, cap, threads)
        failures += not report.passed
        yes += report.source_solutions > 0
    return {"suite": "transitivity", "chain": red.name, "instances": count, "yes_instances": yes,
            "failures": failures, "passed": failures == 0}


def partial_transport(seed: int = 0, count: int = 50, cap: int = DEFAULT_CAP, threads: int = 1) -> dict:
    """Partial-solution status agrees across ``f`` for random ``S <= T``."""
    rows = []
    for chain in PARTIAL_CHAINS:
        red = parse_chain(chain)
        rng = _rng(seed, f"partial:{chain}")
        make = SOURCES[red.source.name]
        agree = positives = 0
        for _ in range(count):
            inst = _bundle(red.source.name, make(rng))
            reduced = red.apply(inst)
            emb = reduced.embedding
            sols = enumerate_solutions(inst, cap, threads)
            decided = rng.getrandbits(inst.width) if inst.width else 0
            # Half the queries restrict a real solution, so positives occur.
            if sols and rng.random() < 0.5:
                chosen = rng.choice(sols) & decided
            else:
                chosen = rng.getrandbits(inst.width) & decided if inst.width else 0
            here = is_partial_solution(inst, chosen, decided, cap, sols)
            there = is_partial_solution(reduced.target, emb.image(chosen), emb.image(decided), cap)
            agree += here == there
            positives += here
        rows.append({"chain": chain, "triples": count, "agree": agree, "positives": positives})
    return {"suite": "partial-transport", "edges": rows, "passed": all(r["agree"] == r["triples"] for r in rows)}


def lift_preservation(seed: int = 0, count: int = 50, cap: int = DEFAULT_CAP, threads: int = 1) -> dict:
    """Each lift operator on random games of source width at most 8 and k at most 3."""
    makers: dict[str, Callable[[random.Random, InstanceBundle], Any]] = {
        "selection": lambda r, b: random_selection_game(r, b, r.randint(1, 3)),
        "interdiction": lambda r, b: random_interdiction_game(r, b, r.randint(2, 3), local=r.random() < 0.3),
        "adjustable": lambda r, b: random_adjustable_game(r, b, r.randint(1, 3)),
    }
    rows = []
    for chain in LIFT_CHAINS:
        red = parse_chain(chain)
        for family, make_game in makers.items():
            rng = _rng(seed, f"lift:{chain}:{family}")
            disagree = illegal = first_wins = 0
            for _ in range(count):
                while True:
                    base = _bundle(red.source.name, SOURCES[red.source.name](rng))
                    if base.width <= 8:
                        break
                report = verify_lift(lift(red, make_game(rng, base), cap), cap, threads)
                disagree += not report.agree
                illegal += report.illegal_lines
                first_wins += report.source_first_wins
            rows.append({"chain": chain, "lift": family, "games": count, "disagreements": disagree,
                         "illegal_lines": illegal, "first_player_wins": first_wins})
    return {"suite": "lift-preservation", "rows": rows,
            "passed": all(r["disagreements"] == 0 and r["illegal_lines"] == 0 for r in rows)}


def _small_formulas(num_vars: int = 3, max_clauses: int = 2) -> list[CnfFormula]:
    """Every formula of at most ``max_clauses`` distinct non-tautological clauses."""
    lits = [s * v for v in range(1, num_vars + 1) for s in (1, -1)]
    clauses = [
        c for r in range(1, num_vars + 1) for c in itertools.combinations(lits, r) if not any(-x in c for x in c)
    ]
    out = []
    for m in range(max_clauses + 1):
        for combo in itertools.combinations(clauses, m):
            out.append(CnfFormula(num_vars, combo))
    return out


def _gadget_rows(games: list, kind: str, cap: int, threads: int) -> tuple[int, int, list[dict]]:
    disagree = illegal = 0
    witnesses = []
    for g in games:
        report = verify_lift(gadget_pair(g, kind), cap, threads)
        disagree += not report.agree
        illegal += report.illegal_lines
        if not report.passed and len(witnesses) < 3:
            witnesses.append({"formula": [list(c) for c in g.base.payload.clauses], **report.to_dict()})
    return disagree, illegal, witnesses


def interdiction_gadget(seed: int = 0, samples: int = 20, cap: int = DEFAULT_CAP, threads: int = 1) -> dict:
    k = 3
    sat_v = get_problem("sat-v")
    from .games import SelectionGame

    exhaustive = [SelectionGame(InstanceBundle.of(sat_v, f), (1, 2, 4)) for f in _small_formulas()]
    rng = _rng(seed, "interdiction-gadget")
    sampled = [random_sat_selection(rng, k, 2) for _ in range(samples)]
    budgets_ok = True
    for g in exhaustive + sampled:
        built = build_interdiction_gadget(g)
        n = built.n
        budgets_ok &= (built.game.budget_protector, built.game.budget_blocker) == (n * (k - 1) // 2, n * (k - 1))
    d1, i1, w1 = _gadget_rows(exhaustive, "interdiction", cap, threads)
    d2, i2, w2 = _gadget_rows(sampled, "interdiction", cap, threads)
    return {
        "suite": "interdiction-gadget",
        "exhaustive_games": len(exhaustive),
        "exhaustive_disagreements": d1,
        "sampled_games": len(sampled),
        "sampled_disagreements": d2,
        "illegal_lines": i1 + i2,
        "budgets_exact": budgets_ok,
        "witnesses": w1 + w2,
        "passed": d1 == d2 == 0 and i1 + i2 == 0 and budgets_ok,
    }


def adjustable_gadget(seed: int = 0, cap: int = DEFAULT_CAP, threads: int = 1) -> dict:
    from .games import SelectionGame

    sat_v = get_problem("sat-v")
    games = [SelectionGame(InstanceBundle.of(sat_v, f), (1, 2, 4)) for f in _small_formulas()]
    budget_ok = all(build_adjustable_gadget(g).game.budget == 1 for g in games)
    width = build_adjustable_gadget(games[0]).game.base.width
    disagree, illegal, witnesses = _gadget_rows(games, "adjustable", cap, threads)
    return {
        "suite": "adjustable-gadget",
        "games": len(games),
        "disagreements": disagree,
        "illegal_lines": illegal,
        "budget_exact": budget_ok,
        "variables": width,
        "witnesses": witnesses,
        "passed": disagree == 0 and illegal == 0 and budget_ok and width == 8,
    }


def cross_solver(seed: int = 0, count: int = 50, cap: int = DEFAULT_CAP, threads: int = 1) -> dict:
    rng = _rng(seed, "cross-interdiction")
    agree_i = 0
    for _ in range(count):
        base = _bundle("vertex-cover", random_graph_k(rng, max_vertices=6))
        vulnerable = rng.getrandbits(base.width) if base.width else 0
        budget = rng.randint(0, 3)
        simple = solve_interdiction_simple(base, vulnerable, budget, cap)
        costs, threshold = unit_cost_encoding(base, vulnerable, budget)
        costly = solve_interdiction_cost(base, costs, threshold, cap)
        agree_i += simple.first_player_wins == costly.first_player_wins
    rng = _rng(seed, "cross-adjustable")
    agree_a = 0
    for _ in range(count):
        base = _bundle("sat-v", random_cnf(rng, max_vars=6, max_clauses=4, max_len=3))
        game = random_adjustable_game(rng, base, 2)
        assert isinstance(game, AdjustableGame)
        a = solve_adjustable(game, cap, threads)
        b = solve_two_stage_cost(zero_one_encoding(game), cap, threads)
        agree_a += a.first_player_wins == b.first_player_wins
    return {
        "suite": "cross-solver",
        "interdiction": {"instances": count, "agree": agree_i},
        "adjustable": {"instances": count, "agree": agree_a},
        "passed": agree_i == count and agree_a == count,
    }


def _literal_instance(rng: random.Random) -> InstanceBundle:
    kind = rng.choice(("sat-l", "literal:vertex-cover", "literal:subset-sum"))
    if kind == "sat-l":
        return _bundle(kind, random_cnf(rng, max_vars=5, max_clauses=4, max_len=3))
    if kind == "literal:vertex-cover":
        return _bundle(kind, random_graph_k(rng, max_vertices=6))
    return _bundle(kind, random_subset_sum(rng, max_items=7))


def universe_covering(seed: int = 0, count: int = 20, duals: int = 50, cap: int = DEFAULT_CAP) -> dict:
    """Unanchored Partition covers, anchored Partition does not, and ``dual`` is an involution.

    The satisfiable Partition instances are images of random yes-instances
    of Subset Sum, which carry the anchoring pair.  Plain random Partition
    instances are also counted for reference.
    """
    rng = _rng(seed, "covering")
    red = parse_chain("subset-sum>partition")
    free_true = anchored_false = 0
    made = 0
    while made < count:
        src = _bundle("subset-sum", random_subset_sum(rng))
        if not enumerate_solutions(src, cap):
            continue
        made += 1
        target = red.apply(src).target
        anchored_false += not is_universe_covering(target, cap)
        free_true += is_universe_covering(_bundle("partition-1", target.payload), cap)
    plain = plain_covering = 0
    while plain < count:
        inst = _bundle("partition", random_partition(rng))
        if not enumerate_solutions(inst, cap):
            continue
        plain += 1
        plain_covering += is_universe_covering(inst, cap)
    rng = _rng(seed, "dual")
    dual_equal = 0
    for _ in range(duals):
        inst = _literal_instance(rng)
        twice = _bundle(f"dual:dual:{inst.problem.name}", inst.payload)
        dual_equal += set(enumerate_solutions(inst, cap)) == set(enumerate_solutions(twice, cap))
    return {
        "suite": "universe-covering",
        "satisfiable_instances": count,
        "unanchored_covering": free_true,
        "anchored_not_covering": anchored_false,
        "plain_random_anchored_covering": [plain_covering, plain],
        "dual_involution": {"instances": duals, "equal": dual_equal},
        "passed": free_true == count and anchored_false == count and dual_equal == duals,
    }


SUITES: dict[int, tuple[str, Callable[..., dict]]] = {
    1: ("SE-property fuzz over every registered edge", se_fuzz),
    2: ("single-clause formula to vertex cover", one_clause),
    3: ("chain sat-l>3sat-l>vertex-cover", transitivity),
    4: ("partial-solution transport", partial_transport),
    5: ("lift winner preservation", lift_preservation),
    6: ("interdiction gadget", interdiction_gadget),
    7: ("adjustable gadget", adjustable_gadget),
    8: ("cross-solver consistency", cross_solver),
    9: ("universe covering and dual involution", universe_covering),
}


def run_suite(number: int, seed: int = 0, cap: int = DEFAULT_CAP, threads: int = 1) -> dict:
    name, fn = SUITES[number]
    kwargs: dict[str, Any] = {"seed": seed, "cap": cap}
    if fn is not universe_covering:
        kwargs["threads"] = threads
    return {"criterion": number, "title": name, **fn(**kwargs)}


def run_all(seed: int = 0, cap: int = DEFAULT_CAP, threads: int = 1, numbers: list[int] | None = None) -> dict:
    reports = [run_suite(n, seed, cap, threads) for n in (numbers or sorted(SUITES))]
    return {"seed": seed, "suites": reports, "passed": all(r["passed"] for r in reports)}


def determinism(seed: int = 0, cap: int = DEFAULT_CAP, numbers: list[int] | None = None) -> dict:
    """Run the chosen suites twice single-threaded and compare the serialized reports."""
    first = dumps(run_all(seed, cap, 1, numbers))
    second = dumps(run_all(seed, cap, 1, numbers))
    return {"suite": "determinism", "bytes": len(first), "identical": first == second, "passed": first == second,
            "report": first}


__all__ = ["SUITES", "determinism", "run_all", "run_suite"] + [fn.__name__ for _, fn in SUITES.values()]

