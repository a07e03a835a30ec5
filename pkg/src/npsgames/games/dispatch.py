"""One entry point for every game type."""

from __future__ import annotations

from typing import Any, Union

from ..core import DEFAULT_CAP
from .adjustable import AdjustableGame, AdjustablePlay, TwoStageCostGame, TwoStageCostPlay, solve_two_stage_cost
from .interdiction import (
    CostInterdiction,
    InterdictionGame,
    InterdictionPlay,
    SimpleInterdiction,
    solve_interdiction_cost,
    solve_interdiction_simple,
)
from .selection import SelectionGame, SelectionPlay
from .solver import AlternatingGame, GameVerdict, solve_game

Game = Union[SelectionGame, InterdictionGame, AdjustableGame, TwoStageCostGame, SimpleInterdiction, CostInterdiction]


def play_for(game: Any, cap: int = DEFAULT_CAP, threads: int = 1) -> AlternatingGame | None:
    """The alternating-move view of ``game``; ``None`` for the one-shot blocker problems."""
    if isinstance(game, SelectionGame):
        return SelectionPlay(game, cap, threads)
    if isinstance(game, InterdictionGame):
        return InterdictionPlay(game, cap, threads)
    if isinstance(game, AdjustableGame):
        return AdjustablePlay(game, cap, threads)
    if isinstance(game, TwoStageCostGame):
        return TwoStageCostPlay(game, cap, threads)
    return None


def solve(game: Game, cap: int = DEFAULT_CAP, threads: int = 1, memoize: bool = True) -> tuple[GameVerdict, AlternatingGame | None]:
    if isinstance(game, SimpleInterdiction):
        return solve_interdiction_simple(game.base, game.vulnerable, game.budget, cap), None
    if isinstance(game, CostInterdiction):
        return solve_interdiction_cost(game.base, game.costs, game.threshold, cap), None
    if isinstance(game, TwoStageCostGame):
        return solve_two_stage_cost(game, cap, threads, memoize), play_for(game, cap, threads)
    play = play_for(game, cap, threads)
    if play is None:
        raise TypeError(f"not a game: {type(game).__name__}")
    return solve_game(play, memoize=memoize, threads=threads), play
