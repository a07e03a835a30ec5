"""k-move adversarial selection games."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .. import bits
from ..core import DEFAULT_CAP, InstanceBundle, is_solution
from ..errors import MalformedGame
from .solver import AlternatingGame, GameVerdict, SolutionSet, solve_game


@dataclass(frozen=True)
class SelectionGame:
    """Players alternately pick ``S_i`` from part ``U_i``; Alice moves first.

    For odd ``k`` Alice wins when the union is a solution; for even ``k``
    she wins when it is not.
    """

    base: InstanceBundle
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise MalformedGame("a selection game needs at least one part")
        seen = 0
        for part in self.parts:
            if part < 0 or part >> self.base.width:
                raise MalformedGame("part leaves the universe")
            if part & seen:
                raise MalformedGame("parts overlap")
            seen |= part
        if seen != self.base.full:
            raise MalformedGame("parts do not cover the universe")

    @property
    def k(self) -> int:
        return len(self.parts)


class SelectionPlay(AlternatingGame):
    """State: ``(moves made, union so far)``.

    The union is a sufficient memo key because the remaining play only
    depends on which parts are left and on what has been picked.
    """

    roles = ("Alice", "Bob")

    def __init__(self, game: SelectionGame, cap: int = DEFAULT_CAP, threads: int = 1) -> None:
        self.game = game
        self.solutions = SolutionSet(game.base, cap, threads)
        k = game.k
        # Alice wins at the end on membership for odd k, on non-membership for even k.
        self.want_member = k % 2 == 1
        before_last = game.base.full & ~game.parts[-1]
        self.completable = frozenset(self.solutions.project(before_last))

    def initial(self) -> tuple[int, int]:
        return 0, 0

    def to_move(self, state: tuple[int, int]) -> int:
        return state[0] % 2

    def moves(self, state: tuple[int, int]) -> Sequence[int]:
        return bits.submasks(self.game.parts[state[0]])

    def legal(self, state: tuple[int, int], move: int) -> bool:
        return move >= 0 and not move & ~self.game.parts[state[0]]

    def play(self, state: tuple[int, int], move: int) -> tuple[int, int]:
        return state[0] + 1, state[1] | move

    def outcome(self, state: tuple[int, int], exact: bool = False) -> bool | None:
        i, union = state
        if i < self.game.k:
            return None
        member = is_solution(self.game.base, union) if exact else union in self.solutions
        return member == self.want_member

    def shortcut(self, state: tuple[int, int]) -> bool | None:
        # Before the last move: the mover can complete a solution iff the
        # union so far is the restriction of some solution.
        i, union = state
        if i != self.game.k - 1:
            return None
        return (union in self.completable) == self.want_member

    def labels(self, move: int) -> list[str]:
        return self.game.base.names(move)


def solve_selection(
    game: SelectionGame, cap: int = DEFAULT_CAP, threads: int = 1, memoize: bool = True
) -> GameVerdict:
    return solve_game(SelectionPlay(game, cap, threads), memoize=memoize, threads=threads)
