"""Independent brute-force oracle.

Plain recursion over every subset, written directly from the quantified
game conditions.  It shares no code with the package solvers: no memo
tables, no projections, no shortcuts, and its own CNF evaluator.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Sequence

Pred = Callable[[int], bool]


def subsets(mask: int) -> list[int]:
    ids = [i for i in range(mask.bit_length()) if mask >> i & 1]
    out = []
    for r in range(len(ids) + 1):
        for combo in combinations(ids, r):
            out.append(sum(1 << i for i in combo))
    return out


def cnf_true(clauses: Sequence[Sequence[int]], true_vars: int) -> bool:
    """Variable-based CNF evaluation; variable v (1-based) is bit v-1."""
    return all(any((lit > 0) == bool(true_vars >> (abs(lit) - 1) & 1) for lit in c) for c in clauses)


def cnf_literals(clauses: Sequence[Sequence[int]], n: int, chosen: int) -> bool:
    """Literal-based: bit i is literal i+1, bit n+i its negation."""
    for v in range(n):
        if (chosen >> v & 1) + (chosen >> (n + v) & 1) != 1:
            return False
    return cnf_true(clauses, chosen & ((1 << n) - 1))


def solutions(pred: Pred, width: int) -> list[int]:
    return [m for m in range(1 << width) if pred(m)]


def selection(pred: Pred, parts: Sequence[int]) -> bool:
    """Alice wins: odd k wants the union in S, even k wants it out."""
    k = len(parts)

    def go(i: int, union: int) -> bool:
        if i == k:
            member = pred(union)
            return member if k % 2 else not member
        options = [go(i + 1, union | s) for s in subsets(parts[i])]
        return any(options) if i % 2 == 0 else all(options)

    return go(0, 0)


def interdiction(
    pred: Pred, width: int, nested: Sequence[int], gp: int, gb: int, local: bool = False
) -> bool:
    """First mover wins the k-move protection game (protector first for odd k)."""
    k = len(nested) + 1
    sols = solutions(pred, width)

    def protector_turn(i: int) -> bool:
        return i % 2 == k % 2  # 1-based move index

    def go(i: int, prot: int, block: int) -> bool:
        if i == k:
            over_p = not local and bin(prot).count("1") > gp
            over_b = not local and bin(block).count("1") > gb
            avoid = any(not s & block for s in sols)
            if k % 2:
                return bool(sols) and (over_b or (not over_p and avoid))
            return (not sols) or over_p or (not over_b and not avoid)
        free = nested[i - 1] & ~(prot | block)
        cap = gp if protector_turn(i) else gb
        moves = [m for m in subsets(free) if not local or bin(m).count("1") <= cap]
        if protector_turn(i):
            results = [go(i + 1, prot | m, block) for m in moves]
        else:
            results = [go(i + 1, prot, block | m) for m in moves]
        return any(results) if i % 2 == 1 else all(results)

    return go(1, 0, 0)


def simple_interdiction(pred: Pred, width: int, vulnerable: int, budget: int) -> bool:
    sols = solutions(pred, width)
    return any(
        bin(b).count("1") <= budget and all(s & b for s in sols) for b in subsets(vulnerable)
    )


def cost_interdiction(pred: Pred, width: int, costs: Sequence[int], threshold: int) -> bool:
    sols = solutions(pred, width)
    for b in range(1 << width):
        if sum(costs[i] for i in range(width) if b >> i & 1) <= threshold and all(s & b for s in sols):
            return True
    return False


def adjustable(pred: Pred, stages: Sequence[int], vulnerable: int, budget: int) -> bool:
    """Decision maker wins when the blocks exceed the budget or the union is a solution."""
    k = len(stages)

    def pick(i: int, union: int, blocked: int, used: int) -> bool:
        options = subsets(stages[i] & ~blocked)
        if i == k - 1:
            return any(used > budget or pred(union | s) for s in options)
        return any(block(i + 1, union | s, used) for s in options)

    def block(i: int, union: int, used: int) -> bool:
        return all(pick(i, union, b, used + bin(b).count("1")) for b in subsets(stages[i] & vulnerable))

    return pick(0, 0, 0, 0)


def two_stage_cost(
    pred: Pred,
    width: int,
    c1: Sequence[int],
    low: Sequence[int],
    high: Sequence[int],
    threshold: int,
    budget: int,
) -> bool:
    """Exists S1, for every scenario, exists disjoint S2 with S1|S2 a solution and cost within threshold."""
    sols = solutions(pred, width)
    uncertain = sum(1 << i for i in range(width) if low[i] != high[i])
    scenarios = [d for d in subsets(uncertain) if bin(d).count("1") <= budget]

    def cost(costs: Sequence[int], mask: int) -> int:
        return sum(costs[i] for i in range(width) if mask >> i & 1)

    for s1 in range(1 << width):
        ok = True
        for d in scenarios:
            c2 = [high[i] if d >> i & 1 else low[i] for i in range(width)]
            best = min(
                (cost(c1, s1) + cost(c2, s & ~s1) for s in sols if s & s1 == s1),
                default=None,
            )
            if best is None or best > threshold:
                ok = False
                break
        if ok:
            return True
    return False
