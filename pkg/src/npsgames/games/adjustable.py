"""Multi-stage adjustable robust games and the two-stage cost form."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from itertools import chain
from typing import Sequence, Union

from .. import bits
from ..core import DEFAULT_CAP, InstanceBundle, is_solution
from ..errors import MalformedGame
from .solver import AlternatingGame, GameVerdict, SolutionSet, solve_game


def _check_partition(base: InstanceBundle, parts: Sequence[int], what: str) -> None:
    seen = 0
    for part in parts:
        if part < 0 or part & ~base.full:
            raise MalformedGame(f"{what} leaves the universe")
        if part & seen:
            raise MalformedGame(f"{what}s overlap")
        seen |= part
    if seen != base.full:
        raise MalformedGame(f"{what}s do not cover the universe")


@dataclass(frozen=True)
class AdjustableGame:
    """The decision maker picks ``S_1``; each later stage starts with a block.

    Stage ``i >= 2``: the adversary blocks ``B_i`` inside ``D & U_i``, then
    the decision maker picks ``S_i`` from ``U_i`` minus ``B_i``.  The
    decision maker wins when the adversary blocked more than ``budget``
    elements in total, or when the union of the picks is a solution.
    """

    base: InstanceBundle
    stages: tuple[int, ...]
    vulnerable: int
    budget: int

    def __post_init__(self) -> None:
        if not self.stages:
            raise MalformedGame("an adjustable game needs at least one stage")
        _check_partition(self.base, self.stages, "stage")
        if self.vulnerable < 0 or self.vulnerable & ~self.base.full:
            raise MalformedGame("vulnerable set leaves the universe")
        if self.budget < 0:
            raise MalformedGame("the blocking budget must be non-negative")

    @property
    def k(self) -> int:
        return len(self.stages)


class AdjustablePlay(AlternatingGame):
    """State: ``(step, union so far, current block, blocks so far)``.

    Step ``0`` is the first pick; stage ``i`` (0-based, ``i >= 1``) is
    block step ``2i-1`` followed by pick step ``2i``.  Once the block count
    exceeds the budget the decision maker has won, so counts stay within
    ``budget`` in every non-terminal state and the state is its own memo key.
    """

    roles = ("decision maker", "adversary")

    def __init__(self, game: AdjustableGame, cap: int = DEFAULT_CAP, threads: int = 1) -> None:
        self.game = game
        self.solutions = SolutionSet(game.base, cap, threads)
        self.last_step = 2 * game.k - 2
        last = game.stages[-1]
        self.final_groups = self.solutions.grouped(game.base.full & ~last, last & game.vulnerable)

    def initial(self) -> tuple[int, int, int, int]:
        return 0, 0, 0, 0

    def to_move(self, state: tuple[int, int, int, int]) -> int:
        return state[0] % 2

    def moves(self, state: tuple[int, int, int, int]) -> Sequence[int]:
        step, _, blocked, _ = state
        stage = self.game.stages[(step + 1) // 2]
        if step % 2:
            return bits.submasks(stage & self.game.vulnerable)
        return bits.submasks(stage & ~blocked)

    def legal(self, state: tuple[int, int, int, int], move: int) -> bool:
        step, _, blocked, _ = state
        stage = self.game.stages[(step + 1) // 2]
        allowed = stage & self.game.vulnerable if step % 2 else stage & ~blocked
        return move >= 0 and not move & ~allowed

    def play(self, state: tuple[int, int, int, int], move: int) -> tuple[int, int, int, int]:
        step, union, _, count = state
        if step % 2:
            return step + 1, union, move, count + move.bit_count()
        return step + 1, union | move, 0, count

    def outcome(self, state: tuple[int, int, int, int], exact: bool = False) -> bool | None:
        step, union, _, count = state
        if count > self.game.budget:
            return True
        if step <= self.last_step:
            return None
        return is_solution(self.game.base, union) if exact else union in self.solutions

    def shortcut(self, state: tuple[int, int, int, int]) -> bool | None:
        # Final pick: some solution extends the union and avoids the block.
        step, union, blocked, _ = state
        if step != self.last_step:
            return None
        return any(not p & blocked for p in self.final_groups.get(union, ()))

    def labels(self, move: int) -> list[str]:
        return self.game.base.names(move)


def solve_adjustable(
    game: AdjustableGame, cap: int = DEFAULT_CAP, threads: int = 1, memoize: bool = True
) -> GameVerdict:
    return solve_game(AdjustablePlay(game, cap, threads), memoize=memoize, threads=threads)


# -- two-stage cost form --------------------------------------------------------


@total_ordering
class _Top:
    """Value of an infeasible inner problem: above every integer."""

    __slots__ = ()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Top)

    def __lt__(self, other: object) -> bool:
        return False

    def __hash__(self) -> int:
        return hash("top")

    def __repr__(self) -> str:
        return "TOP"


TOP = _Top()
Extended = Union[int, _Top]


@dataclass(frozen=True)
class TwoStageCostGame:
    """min over ``S1``, max over scenarios, min over ``S2`` of ``c1(S1) + c2(S2) <= threshold``.

    A scenario raises at most ``budget`` elements from ``c2_low`` to ``c2_high``.
    """

    base: InstanceBundle
    c1: tuple[int, ...]
    c2_low: tuple[int, ...]
    c2_high: tuple[int, ...]
    threshold: int
    budget: int

    def __post_init__(self) -> None:
        n = self.base.width
        if any(len(c) != n for c in (self.c1, self.c2_low, self.c2_high)):
            raise MalformedGame("one cost per universe element required")
        if self.budget < 0:
            raise MalformedGame("the uncertainty budget must be non-negative")

    @property
    def uncertain(self) -> int:
        return bits.from_ids(i for i in range(self.base.width) if self.c2_low[i] != self.c2_high[i])


def _cost(costs: Sequence[int], mask: int) -> int:
    return sum(costs[i] for i in bits.bit_ids(mask))


class TwoStageCostPlay(AlternatingGame):
    """State: ``(step, S1, raised elements, S2)``; picking ``S2`` ends the game.

    First-stage picks are restricted to subsets of solutions: any other
    ``S1`` has no feasible completion and loses in every scenario.
    """

    roles = ("decision maker", "adversary")

    def __init__(self, game: TwoStageCostGame, cap: int = DEFAULT_CAP, threads: int = 1) -> None:
        self.game = game
        self.solutions = SolutionSet(game.base, cap, threads)
        self.first_moves = tuple(sorted(set(chain.from_iterable(bits.submasks(s) for s in self.solutions.masks))))
        self.scenarios = bits.submasks_upto(game.uncertain, game.budget)

    def completions(self, first: int) -> tuple[int, ...]:
        return tuple(sorted({s & ~first for s in self.solutions.masks if s & first == first}))

    def scenario_cost(self, raised: int, second: int) -> int:
        g = self.game
        return sum(g.c2_high[i] if raised >> i & 1 else g.c2_low[i] for i in bits.bit_ids(second))

    def initial(self) -> tuple[int, int, int, int]:
        return 0, 0, 0, 0

    def to_move(self, state: tuple[int, int, int, int]) -> int:
        return state[0] % 2

    def moves(self, state: tuple[int, int, int, int]) -> Sequence[int]:
        step, first, _, _ = state
        if step == 0:
            return self.first_moves
        if step == 1:
            return self.scenarios
        return self.completions(first)

    def play(self, state: tuple[int, int, int, int], move: int) -> tuple[int, int, int, int]:
        step, first, raised, _ = state
        if step == 0:
            return 1, move, 0, 0
        if step == 1:
            return 2, first, move, 0
        return 3, first, raised, move

    def outcome(self, state: tuple[int, int, int, int], exact: bool = False) -> bool | None:
        step, first, raised, second = state
        if step < 3:
            return None
        if second & first:
            return False
        union = first | second
        feasible = is_solution(self.game.base, union) if exact else union in self.solutions
        return feasible and _cost(self.game.c1, first) + self.scenario_cost(raised, second) <= self.game.threshold

    def shortcut(self, state: tuple[int, int, int, int]) -> bool | None:
        step, first, raised, _ = state
        if step != 2:
            return None
        best = self.inner_value(first, raised)
        return best != TOP and best <= self.game.threshold

    def inner_value(self, first: int, raised: int) -> Extended:
        options = [self.scenario_cost(raised, s2) for s2 in self.completions(first)]
        return _cost(self.game.c1, first) + min(options) if options else TOP

    def value(self) -> Extended:
        """The exact min-max-min value, ``TOP`` when no first stage is feasible."""
        best: Extended = TOP
        for first in self.first_moves:
            worst = max(self.inner_value(first, r) for r in self.scenarios)
            best = min(best, worst)
        return best

    def labels(self, move: int) -> list[str]:
        return self.game.base.names(move)


def solve_two_stage_cost(
    game: TwoStageCostGame, cap: int = DEFAULT_CAP, threads: int = 1, memoize: bool = True
) -> GameVerdict:
    play = TwoStageCostPlay(game, cap, threads)
    verdict = solve_game(play, memoize=memoize, threads=threads)
    value = play.value()
    verdict.details["value"] = "TOP" if value == TOP else value
    return verdict


def zero_one_encoding(game: AdjustableGame) -> TwoStageCostGame:
    """Cost form of a two-stage adjustable game: a zero-cost plan exists iff the decision maker wins."""
    if game.k != 2:
        raise MalformedGame("the 0/1 cost encoding needs exactly two stages")
    first, second = game.stages
    n = game.base.width
    exposed = second & game.vulnerable
    c1 = tuple(0 if first >> i & 1 else 1 for i in range(n))
    low = tuple(0 if second >> i & 1 else 1 for i in range(n))
    high = tuple(0 if (second & ~exposed) >> i & 1 else 1 for i in range(n))
    return TwoStageCostGame(game.base, c1, low, high, 0, game.budget)
