"""Interdiction: the one-shot blocker problems and the k-move protection game."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .. import bits
from ..core import DEFAULT_CAP, InstanceBundle, enumerate_solutions
from ..errors import CapExceeded, MalformedGame, MalformedNesting
from .solver import AlternatingGame, GameVerdict, SolutionSet, StrategyNode, any_disjoint, solve_game

GLOBAL = "global"
LOCAL = "local"


def minimal_solutions(masks: Sequence[int]) -> tuple[int, ...]:
    """Inclusion-minimal masks; a blocker hits every solution iff it hits these."""
    out: list[int] = []
    for m in sorted(masks, key=lambda x: (x.bit_count(), x)):
        if not any(o & m == o for o in out):
            out.append(m)
    return tuple(sorted(out))


def _hits_all(blocker: int, masks: Sequence[int]) -> bool:
    return all(m & blocker for m in masks)


def _blocker_verdict(found: int | None, nodes: int, roles=("blocker", "solver")) -> GameVerdict:
    tree = None if found is None else StrategyNode("choice", 0, ((found, StrategyNode("leaf", 1, first_wins=True)),))
    return GameVerdict(found is not None, nodes, tree, False, roles, {"blocker": found})


def solve_interdiction_simple(
    base: InstanceBundle, vulnerable: int, budget: int, cap: int = DEFAULT_CAP
) -> GameVerdict:
    """Is there ``B`` inside ``vulnerable`` with ``|B| <= budget`` meeting every solution?

    Candidates are tried in increasing mask order; the first hit is the witness.
    """
    if vulnerable & ~base.full:
        raise MalformedGame("vulnerable set leaves the universe")
    targets = minimal_solutions(enumerate_solutions(base, cap))
    nodes = 0
    for b in bits.submasks_upto(vulnerable, budget) if budget >= 0 else ():
        nodes += 1
        if _hits_all(b, targets):
            return _blocker_verdict(b, nodes)
    return _blocker_verdict(None, nodes)


def solve_interdiction_cost(
    base: InstanceBundle, costs: Sequence[int], threshold: int, cap: int = DEFAULT_CAP
) -> GameVerdict:
    """Is there ``B`` with ``c(B) <= threshold`` meeting every solution?  Costs may be negative."""
    if len(costs) != base.width:
        raise MalformedGame("one cost per universe element required")
    if base.width > cap:
        raise CapExceeded(f"{base.width} blocker candidates exceed cap {cap}")
    targets = minimal_solutions(enumerate_solutions(base, cap))
    nodes = 0
    for chunk in bits.power_set_chunks(base.width):
        total = np.zeros(chunk.shape, dtype=np.int64)
        for i, c in enumerate(costs):
            total += np.where((chunk >> np.uint64(i)) & np.uint64(1) == 1, np.int64(c), np.int64(0))
        ok = total <= threshold
        for t in targets:
            ok &= (chunk & np.uint64(t)) != 0
        nodes += int(chunk.size)
        hits = np.flatnonzero(ok)
        if hits.size:
            return _blocker_verdict(int(chunk[hits[0]]), nodes)
    return _blocker_verdict(None, nodes)


def unit_cost_encoding(base: InstanceBundle, vulnerable: int, budget: int) -> tuple[list[int], int]:
    """Costs 1 on ``vulnerable`` and ``|U|+1`` elsewhere, with threshold ``min(budget, |U|)``."""
    n = base.width
    costs = [1 if vulnerable >> i & 1 else n + 1 for i in range(n)]
    return costs, min(budget, n)


@dataclass(frozen=True)
class InterdictionGame:
    """k-move protection-interdiction game on nested access sets ``C_1 <= ... <= C_{k-1}``.

    For odd ``k`` the protector moves first; for even ``k`` the blocker does.
    Moves ``1..k-1`` place tokens on unoccupied elements of ``C_i``; the
    final move picks a solution.
    """

    base: InstanceBundle
    nested: tuple[int, ...]
    budget_protector: int
    budget_blocker: int
    budget_mode: str = GLOBAL

    def __post_init__(self) -> None:
        if not self.nested:
            raise MalformedGame("an interdiction game needs k >= 2, i.e. at least one access set")
        prev = 0
        for c in self.nested:
            if c < 0 or c & ~self.base.full:
                raise MalformedNesting("access set leaves the universe")
            if prev & ~c:
                raise MalformedNesting("access sets are not nested")
            prev = c
        if self.budget_protector < 0 or self.budget_blocker < 0:
            raise MalformedGame("budgets must be non-negative")
        if self.budget_mode not in (GLOBAL, LOCAL):
            raise MalformedGame(f"unknown budget mode {self.budget_mode!r}")

    @property
    def k(self) -> int:
        return len(self.nested) + 1

    def protector_moves_at(self, move: int) -> bool:
        """Whether the protector places tokens at 1-based move ``move``."""
        return move % 2 == self.k % 2


class InterdictionPlay(AlternatingGame):
    """State: ``(moves made, protected, blocked)``.

    Occupancy decides which elements remain available and the final
    condition only reads the two token sets, so the state itself is the
    memo key.
    """

    def __init__(self, game: InterdictionGame, cap: int = DEFAULT_CAP, threads: int = 1) -> None:
        self.game = game
        self.solutions = SolutionSet(game.base, cap, threads)
        self.odd = game.k % 2 == 1
        self.roles = ("protector", "blocker") if self.odd else ("blocker", "protector")
        reach = game.nested[-1]
        proj = self.solutions.project(reach)
        self.projections: np.ndarray | tuple[int, ...] = (
            np.array(proj, dtype=np.uint64) if game.base.width <= 64 else proj
        )
        self._avoidable = lru_cache(maxsize=None)(self._avoidable_uncached)

    def _avoidable_uncached(self, blocked: int) -> bool:
        return any_disjoint(self.projections, blocked)

    def initial(self) -> tuple[int, int, int]:
        return 0, 0, 0

    def to_move(self, state: tuple[int, int, int]) -> int:
        return state[0] % 2

    def moves(self, state: tuple[int, int, int]) -> Sequence[int]:
        i, prot, block = state
        g = self.game
        free = g.nested[i] & ~(prot | block)
        if g.budget_mode == LOCAL:
            cap = g.budget_protector if g.protector_moves_at(i + 1) else g.budget_blocker
            return bits.submasks_upto(free, cap)
        return bits.submasks(free)

    def legal(self, state: tuple[int, int, int], move: int) -> bool:
        i, prot, block = state
        g = self.game
        if move < 0 or move & ~(g.nested[i] & ~(prot | block)):
            return False
        if g.budget_mode == LOCAL:
            cap = g.budget_protector if g.protector_moves_at(i + 1) else g.budget_blocker
            return move.bit_count() <= cap
        return True

    def play(self, state: tuple[int, int, int], move: int) -> tuple[int, int, int]:
        i, prot, block = state
        if self.game.protector_moves_at(i + 1):
            return i + 1, prot | move, block
        return i + 1, prot, block | move

    def _solution_avoids(self, blocked: int, exact: bool) -> bool:
        if exact:
            return any(not s & blocked for s in self.solutions.masks)
        return self._avoidable(blocked)

    def outcome(self, state: tuple[int, int, int], exact: bool = False) -> bool | None:
        i, prot, block = state
        g = self.game
        if i < g.k - 1:
            return None
        has_solution = bool(len(self.solutions))
        if g.budget_mode == LOCAL:
            over_p = over_b = False
        else:
            over_p = prot.bit_count() > g.budget_protector
            over_b = block.bit_count() > g.budget_blocker
        if self.odd:
            # exists S: if |B| <= Gamma_B then |P| <= Gamma_P and B meets no element of S
            return has_solution and (over_b or (not over_p and self._solution_avoids(block, exact)))
        # for all S: if |P| <= Gamma_P then |B| <= Gamma_B and B meets S
        return (not has_solution) or over_p or (not over_b and not self._solution_avoids(block, exact))

    def labels(self, move: int) -> list[str]:
        return self.game.base.names(move)


def solve_protection_interdiction(
    game: InterdictionGame, cap: int = DEFAULT_CAP, threads: int = 1, memoize: bool = True
) -> GameVerdict:
    return solve_game(InterdictionPlay(game, cap, threads), memoize=memoize, threads=threads)


@dataclass(frozen=True)
class SimpleInterdiction:
    """Blocker picks at most ``budget`` elements of ``vulnerable`` to meet every solution."""

    base: InstanceBundle
    vulnerable: int
    budget: int


@dataclass(frozen=True)
class CostInterdiction:
    """Blocker picks elements of total cost at most ``threshold`` to meet every solution."""

    base: InstanceBundle
    costs: tuple[int, ...]
    threshold: int
