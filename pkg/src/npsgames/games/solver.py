"""Exhaustive two-player solver shared by all game families.

A game is described by an :class:`AlternatingGame`.  Player 0 is the first
player; ``outcome`` reports, at terminal states, whether player 0 has won.
The solver memoises on ``key(state)`` and can extract a winning strategy
tree, which :func:`replay_strategy` re-checks against every opponent line
using the exact (verifier-backed) terminal test.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Hashable, Sequence

import numpy as np

from .. import bits
from ..core import DEFAULT_CAP, InstanceBundle, enumerate_solutions, solution_array

# Strategy trees larger than this are cut off and flagged as truncated.
STRATEGY_NODE_LIMIT = 2000


class SolutionSet:
    """The solutions of a base instance, with the projections games ask for."""

    def __init__(self, inst: InstanceBundle, cap: int = DEFAULT_CAP, threads: int = 1) -> None:
        self.inst = inst
        if inst.width <= 64:
            self.array: np.ndarray | None = solution_array(inst, cap, threads)
            self.masks = tuple(int(m) for m in self.array)
        else:
            self.array = None
            self.masks = enumerate_solutions(inst, cap, threads)
        self.members = frozenset(self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def project(self, keep: int) -> tuple[int, ...]:
        """Distinct ``s & keep`` over all solutions, ascending."""
        if self.array is not None:
            return tuple(int(m) for m in np.unique(self.array & np.uint64(keep)))
        return tuple(sorted({s & keep for s in self.masks}))

    def grouped(self, prefix: int, keep: int) -> dict[int, tuple[int, ...]]:
        """Distinct ``s & keep`` per value of ``s & prefix``."""
        groups: dict[int, set[int]] = {}
        for s in self.masks:
            groups.setdefault(s & prefix, set()).add(s & keep)
        return {p: tuple(sorted(v)) for p, v in groups.items()}


def any_disjoint(masks: Sequence[int] | np.ndarray, blocked: int) -> bool:
    """Whether some mask avoids every bit of ``blocked``."""
    if isinstance(masks, np.ndarray):
        return bool(np.any((masks & np.uint64(blocked)) == 0))
    return any(not m & blocked for m in masks)


class AlternatingGame(ABC):
    """Finite perfect-information game; player 0 moves first."""

    roles: tuple[str, str] = ("first", "second")

    @abstractmethod
    def initial(self) -> Any: ...

    @abstractmethod
    def to_move(self, state: Any) -> int: ...

    @abstractmethod
    def moves(self, state: Any) -> Sequence[int]:
        """Legal moves as masks, in increasing order."""

    @abstractmethod
    def play(self, state: Any, move: int) -> Any: ...

    @abstractmethod
    def outcome(self, state: Any, exact: bool = False) -> bool | None:
        """At terminal states, whether player 0 wins; ``None`` elsewhere.

        ``exact`` asks for the verifier itself rather than any precomputed
        solution table.
        """

    def key(self, state: Any) -> Hashable:
        return state

    def shortcut(self, state: Any) -> bool | None:
        """Optional closed-form value of a non-terminal state."""
        return None

    def legal(self, state: Any, move: int) -> bool:
        """Whether ``move`` is available at ``state``; games override with a subset test."""
        return move in self.moves(state)

    def labels(self, move: int) -> list[str]:
        return [str(i) for i in bits.bit_ids(move)]


@dataclass
class StrategyNode:
    """One node of a strategy tree.

    ``kind`` is ``choice`` (the strategist plays ``moves[0]``), ``reply``
    (every opponent move with its continuation), ``leaf`` (terminal) or
    ``truncated`` (cut off at the node limit).
    """

    kind: str
    player: int
    moves: tuple[tuple[int, "StrategyNode"], ...] = ()
    first_wins: bool | None = None

    def size(self) -> int:
        return 1 + sum(child.size() for _, child in self.moves)

    def to_dict(self, game: AlternatingGame) -> dict:
        out: dict[str, Any] = {"kind": self.kind}
        if self.kind == "leaf":
            out["winner"] = game.roles[0 if self.first_wins else 1]
            return out
        if self.kind == "truncated":
            return out
        out["player"] = game.roles[self.player]
        if self.kind == "choice":
            move, child = self.moves[0]
            out["move"] = game.labels(move)
            out["next"] = child.to_dict(game)
        else:
            out["replies"] = [{"move": game.labels(m), "next": c.to_dict(game)} for m, c in self.moves]
        return out


@dataclass
class GameVerdict:
    first_player_wins: bool
    nodes: int
    strategy: StrategyNode | None = None
    truncated: bool = False
    roles: tuple[str, str] = ("first", "second")
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def winner(self) -> str:
        return self.roles[0 if self.first_player_wins else 1]

    def root_move(self) -> int | None:
        if self.strategy is not None and self.strategy.kind == "choice":
            return self.strategy.moves[0][0]
        return None

    def to_dict(self, game: AlternatingGame | None = None) -> dict:
        out: dict[str, Any] = {
            "first_player_wins": self.first_player_wins,
            "winner": self.winner,
            "nodes": self.nodes,
            "strategy_truncated": self.truncated,
        }
        if game is not None and self.strategy is not None:
            out["strategy"] = self.strategy.to_dict(game)
        out.update(self.details)
        return out


class Solver:
    def __init__(self, game: AlternatingGame, memoize: bool = True) -> None:
        self.game = game
        self.memoize = memoize
        self.table: dict[Hashable, bool] = {}
        self.nodes = 0

    def wins(self, state: Any) -> bool:
        """Whether player 0 wins from ``state`` under optimal play."""
        self.nodes += 1
        game = self.game
        done = game.outcome(state)
        if done is not None:
            return done
        key = game.key(state) if self.memoize else None
        if self.memoize and key in self.table:
            return self.table[key]
        value = game.shortcut(state)
        if value is None:
            if game.to_move(state) == 0:
                value = any(self.wins(game.play(state, m)) for m in game.moves(state))
            else:
                value = all(self.wins(game.play(state, m)) for m in game.moves(state))
        if self.memoize:
            self.table[key] = value
        return value

    def extract(self, state: Any, strategist: int, limit: int = STRATEGY_NODE_LIMIT) -> tuple[StrategyNode, bool]:
        """A strategy tree for ``strategist``, who must be winning at ``state``."""
        budget = [limit]
        cut = [False]
        target = strategist == 0
        game = self.game

        def build(s: Any) -> StrategyNode:
            done = game.outcome(s)
            if done is not None:
                return StrategyNode("leaf", game.to_move(s), first_wins=done)
            if budget[0] <= 0:
                cut[0] = True
                return StrategyNode("truncated", game.to_move(s))
            budget[0] -= 1
            mover = game.to_move(s)
            if mover == strategist:
                for m in game.moves(s):
                    nxt = game.play(s, m)
                    if self.wins(nxt) == target:
                        return StrategyNode("choice", mover, ((m, build(nxt)),))
                raise AssertionError("strategist has no winning move at a won state")
            replies = tuple((m, build(game.play(s, m))) for m in game.moves(s))
            return StrategyNode("reply", mover, replies)

        return build(state), cut[0]


def solve_game(
    game: AlternatingGame, memoize: bool = True, threads: int = 1, strategy: bool = True
) -> GameVerdict:
    """Solve from the initial state; optionally split the root moves across threads.

    Threaded runs use one memo table per root move, so the verdict is the
    same but the node count may differ from a single-threaded run.
    """
    solver = Solver(game, memoize)
    root = game.initial()
    if threads > 1 and game.outcome(root) is None:
        moves = list(game.moves(root))

        def child(m: int) -> tuple[bool, int]:
            local = Solver(game, memoize)
            return local.wins(game.play(root, m)), local.nodes

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(child, moves))
        values = [r[0] for r in results]
        first = any(values) if game.to_move(root) == 0 else all(values)
        solver.nodes = 1 + sum(r[1] for r in results)
    else:
        first = solver.wins(root)
    nodes = solver.nodes
    tree, cut = (solver.extract(root, 0 if first else 1) if strategy else (None, False))
    return GameVerdict(first, nodes, tree, cut, game.roles)


def replay_strategy(game: AlternatingGame, verdict: GameVerdict) -> bool:
    """Play the extracted strategy against every opponent line.

    Terminal states are judged by the verifier.  Truncated branches are
    re-solved by a fresh solver with its own memo table.
    """
    if verdict.strategy is None:
        return False
    strategist = 0 if verdict.first_player_wins else 1
    target = strategist == 0
    fresh = Solver(game)

    def check(state: Any, node: StrategyNode) -> bool:
        done = game.outcome(state, exact=True)
        if done is not None:
            return done == target
        if node.kind == "truncated":
            return fresh.wins(state) == target
        if node.kind == "leaf" or game.to_move(state) != node.player:
            return False
        legal = game.moves(state)
        if node.kind == "choice":
            move, child = node.moves[0]
            return move in set(legal) and check(game.play(state, move), child)
        if [m for m, _ in node.moves] != list(legal):
            return False
        return all(check(game.play(state, m), c) for m, c in node.moves)

    return check(game.initial(), verdict.strategy)
