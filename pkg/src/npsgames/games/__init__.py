"""Lifted games over NP-S problems and their exhaustive solvers."""

from .adjustable import (
    TOP,
    AdjustableGame,
    AdjustablePlay,
    TwoStageCostGame,
    TwoStageCostPlay,
    solve_adjustable,
    solve_two_stage_cost,
    zero_one_encoding,
)
from .dispatch import Game, play_for, solve
from .interdiction import (
    CostInterdiction,
    SimpleInterdiction,
    GLOBAL,
    LOCAL,
    InterdictionGame,
    InterdictionPlay,
    solve_interdiction_cost,
    solve_interdiction_simple,
    solve_protection_interdiction,
    unit_cost_encoding,
)
from .selection import SelectionGame, SelectionPlay, solve_selection
from .solver import AlternatingGame, GameVerdict, SolutionSet, Solver, StrategyNode, replay_strategy, solve_game

__all__ = [
    "Game", "play_for", "solve", "CostInterdiction", "SimpleInterdiction",
    "TOP", "AdjustableGame", "AdjustablePlay", "TwoStageCostGame", "TwoStageCostPlay",
    "solve_adjustable", "solve_two_stage_cost", "zero_one_encoding",
    "GLOBAL", "LOCAL", "InterdictionGame", "InterdictionPlay", "solve_interdiction_cost",
    "solve_interdiction_simple", "solve_protection_interdiction", "unit_cost_encoding",
    "SelectionGame", "SelectionPlay", "solve_selection",
    "AlternatingGame", "GameVerdict", "SolutionSet", "Solver", "StrategyNode", "replay_strategy", "solve_game",
]
