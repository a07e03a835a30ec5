"""Lifting solution-embedding reductions to games, and the two SAT-V gadget constructions.

A lift keeps the move structure of a game and pushes every part through
the element map ``f``; target elements outside the image join the final
move.  The gadgets turn a selection game on SAT-V into an interdiction or
an adjustable game on a larger SAT-V formula, pairing each variable
``u`` with a partner ``w`` that should take the opposite value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import bits
from .core import DEFAULT_CAP, Embedding, InstanceBundle, SEReduction, check_se_property
from .errors import KTooSmall, MalformedGame, NotSatV, SEPropertyFailed, SpecMismatch
from .games import (
    AdjustableGame,
    AdjustablePlay,
    InterdictionGame,
    InterdictionPlay,
    SelectionGame,
    SelectionPlay,
    play_for,
    solve,
)
from .games.interdiction import GLOBAL, LOCAL
from .games.solver import AlternatingGame, StrategyNode
from .problems.payloads import CnfFormula
from .problems.registry import get_problem

SAT_V_NAMES = ("sat-v", "3sat-v")


@dataclass(frozen=True)
class LiftedGamePair:
    source: Any
    target: Any
    embedding: Embedding
    provenance: str

    def to_dict(self) -> dict:
        from .io import game_to_doc

        return {
            "provenance": self.provenance,
            "source": game_to_doc(self.source),
            "target": game_to_doc(self.target),
            "embedding": list(self.embedding.table),
        }

    @classmethod
    def from_dict(cls, doc: Any) -> "LiftedGamePair":
        from .errors import DecodeError
        from .io import game_from_doc
        from .problems.payloads import _int_list, _require

        source = game_from_doc(_require(doc, "source"))
        target = game_from_doc(_require(doc, "target"))
        provenance = _require(doc, "provenance")
        if not isinstance(provenance, str):
            raise DecodeError("provenance must be a string")
        table = tuple(_int_list(_require(doc, "embedding"), "embedding"))
        if len(table) != source.base.width:
            raise DecodeError("embedding length differs from the source universe")
        return cls(source, target, Embedding(table, target.base.width), provenance)


# -- lifts of SE reductions ---------------------------------------------------------


def _prepare(red: SEReduction, base: InstanceBundle, cap: int, check: bool) -> tuple[InstanceBundle, Embedding]:
    if base.problem != red.source:
        raise SpecMismatch(f"{red.name} expects {red.source.name}, the game is over {base.problem.name}")
    if check:
        report = check_se_property(red, base, cap)
        if not report.passed:
            raise SEPropertyFailed(f"{red.name} fails the embedding check on this instance")
    reduced = red.apply(base)
    return reduced.target, reduced.embedding


def lift_selection(red: SEReduction, g: SelectionGame, cap: int = DEFAULT_CAP, check: bool = True) -> SelectionGame:
    """``U'_i = f(U_i)``; the auxiliary elements join the last part."""
    target, emb = _prepare(red, g.base, cap, check)
    parts = [emb.image(p) for p in g.parts]
    parts[-1] |= emb.auxiliary
    return SelectionGame(target, tuple(parts))


def lift_interdiction(red: SEReduction, g: InterdictionGame, cap: int = DEFAULT_CAP, check: bool = True) -> InterdictionGame:
    """Access sets are pushed through ``f``; budgets and budget mode stay."""
    target, emb = _prepare(red, g.base, cap, check)
    return InterdictionGame(
        target, tuple(emb.image(c) for c in g.nested), g.budget_protector, g.budget_blocker, g.budget_mode
    )


def lift_adjustable(red: SEReduction, g: AdjustableGame, cap: int = DEFAULT_CAP, check: bool = True) -> AdjustableGame:
    target, emb = _prepare(red, g.base, cap, check)
    stages = [emb.image(s) for s in g.stages]
    stages[-1] |= emb.auxiliary
    return AdjustableGame(target, tuple(stages), emb.image(g.vulnerable), g.budget)


_LIFTS: dict[type, tuple[str, Callable[..., Any]]] = {
    SelectionGame: ("selection-lift", lift_selection),
    InterdictionGame: ("interdiction-lift", lift_interdiction),
    AdjustableGame: ("adjustable-lift", lift_adjustable),
}


def lift(red: SEReduction, g: Any, cap: int = DEFAULT_CAP, check: bool = True) -> LiftedGamePair:
    """Lift any liftable game and package it with the embedding."""
    try:
        kind, fn = _LIFTS[type(g)]
    except KeyError:
        raise MalformedGame(f"{type(g).__name__} has no reduction lift") from None
    target = fn(red, g, cap, check)
    emb = red.apply(g.base).embedding
    return LiftedGamePair(g, target, emb, f"{kind}:{red.name}")


# -- gadgets -------------------------------------------------------------------


@dataclass(frozen=True)
class _Layout:
    """Variable positions of a selection game laid out on equal-size blocks.

    Part ``i`` (0-based) occupies ``u`` ids ``i*n .. i*n+n-1``; original
    variables come first in ascending order and dummies fill the rest.
    Partners ``w`` sit ``parts*n`` ids later.
    """

    parts: int
    n: int
    members: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, g: SelectionGame) -> "_Layout":
        members = tuple(tuple(bits.bit_ids(p)) for p in g.parts)
        return cls(len(members), max((len(m) for m in members), default=0), members)

    def u(self, i: int, j: int) -> int:
        return i * self.n + j

    def w(self, i: int, j: int) -> int:
        return (self.parts + i) * self.n + j

    def block(self, i: int) -> int:
        """``U_i | W_i`` as a mask."""
        row = bits.full_mask(self.n)
        return row << self.u(i, 0) | row << self.w(i, 0)

    def table(self) -> tuple[int, ...]:
        """Source variable id to its ``u`` id."""
        out: dict[int, int] = {}
        for i, row in enumerate(self.members):
            for j, v in enumerate(row):
                out[v] = self.u(i, j)
        return tuple(out[v] for v in range(len(out)))

    def honest(self, i: int, move: int, selected_side: bool) -> int:
        """Mask picking, per position of part ``i``, ``u`` when the source picked the variable.

        With ``selected_side`` false the opposite partner is returned
        instead, which is what a blocker places.
        """
        out = 0
        row = self.members[i]
        for j in range(self.n):
            chosen = j < len(row) and bool(move >> row[j] & 1)
            take_u = chosen == selected_side
            out |= 1 << (self.u(i, j) if take_u else self.w(i, j))
        return out


def _require_sat_v(g: SelectionGame) -> CnfFormula:
    if g.base.problem.name not in SAT_V_NAMES:
        raise NotSatV(f"gadgets need a SAT-V base, got {g.base.problem.name}")
    return g.base.payload


def _lit(var: int, positive: bool = True) -> int:
    return var + 1 if positive else -(var + 1)


def _source_clauses(phi: CnfFormula, table: Sequence[int], extra: Sequence[int]) -> list[tuple[int, ...]]:
    out = []
    for clause in phi.clauses:
        mapped = [_lit(table[abs(x) - 1], x > 0) for x in clause]
        out.append(tuple(mapped) + tuple(extra))
    return out


def interdiction_parity(k: int) -> tuple[list[int], list[int]]:
    """1-based protector and blocker moves among ``1..k-1``."""
    first = [i for i in range(1, k) if i % 2 == 1]
    second = [i for i in range(1, k) if i % 2 == 0]
    if k % 2:
        return [i for i in first if i <= k - 2], second
    return [i for i in second if i <= k - 2], first


def interdiction_budgets(n: int, k: int) -> tuple[int, int]:
    """Protector and blocker budgets of the gadget in global mode."""
    if k % 2:
        return n * (k - 1) // 2, n * (k - 1)
    return n * (k - 2) // 2, n * (k - 1)


@dataclass(frozen=True)
class InterdictionGadget:
    game: InterdictionGame
    table: tuple[int, ...]
    n: int
    families: dict[str, int] = field(default_factory=dict)


def build_interdiction_gadget(g: SelectionGame, local: bool = False) -> InterdictionGadget:
    """The gadget instance plus the id table of the original variables and clause-family sizes."""
    phi = _require_sat_v(g)
    k = g.k
    if k < 2:
        raise KTooSmall("the interdiction gadget needs at least two moves")
    lay = _Layout.of(g)
    n = lay.n
    protector, blocker = interdiction_parity(k)
    nxt = 2 * k * n
    s_help: dict[tuple[int, int], int] = {}
    for i in blocker:
        for j in range(n):
            s_help[i, j] = nxt
            nxt += 1
    t_help: dict[tuple[int, int], int] = {}
    for i in protector:
        for j in range(n):
            t_help[i, j] = nxt
            nxt += 1
    s, t = nxt, nxt + 1
    width = nxt + 2
    S, T = _lit(s), _lit(t)

    def u(i: int, j: int) -> int:
        return _lit(lay.u(i - 1, j))

    def w(i: int, j: int) -> int:
        return _lit(lay.w(i - 1, j))

    table = lay.table()
    l1 = _source_clauses(phi, table, (S, T))
    l2 = [(u(i, j), w(i, j), S) for i in protector for j in range(n)]
    l2 += [(u(i, j), w(i, j), S, T) for i in blocker for j in range(n)]
    l3: list[tuple[int, ...]] = []
    for i in blocker:
        for j in range(n):
            l3 += [(-_lit(s_help[i, j]), u(i, j)), (-_lit(s_help[i, j]), w(i, j))]
    for i in protector:
        for j in range(n):
            l3 += [(-_lit(t_help[i, j]), u(i, j)), (-_lit(t_help[i, j]), w(i, j))]
    l4 = [(-T, *(_lit(v) for v in t_help.values())), (-S, *(_lit(v) for v in s_help.values()))]
    l5: list[tuple[int, ...]] = []
    for i in range(1, k + 1):
        for j in range(n):
            l5 += [(u(i, j), w(i, j), S, T), (-u(i, j), -w(i, j), S, T)]
    psi = CnfFormula(width, tuple(l1 + l2 + l3 + l4 + l5))
    base = InstanceBundle.of(get_problem("sat-v"), psi)
    nested = []
    reach = 0
    for i in range(k - 1):
        reach |= lay.block(i)
        nested.append(reach)
    if local:
        if k % 2 == 0:
            raise MalformedGame("the local-budget gadget is defined for an odd number of moves only")
        gp, gb, mode = n, 2 * n, LOCAL
    else:
        (gp, gb), mode = interdiction_budgets(n, k), GLOBAL
    game = InterdictionGame(base, tuple(nested), gp, gb, mode)
    families = {"l1": len(l1), "l2": len(l2), "l3": len(l3), "l4": len(l4), "l5": len(l5)}
    return InterdictionGadget(game, table, n, families)


def gadget_selection_to_interdiction(g: SelectionGame, local: bool = False) -> InterdictionGame:
    return build_interdiction_gadget(g, local).game


@dataclass(frozen=True)
class AdjustableGadget:
    game: AdjustableGame
    table: tuple[int, ...]
    n: int
    families: dict[str, int] = field(default_factory=dict)


def build_adjustable_gadget(g: SelectionGame) -> AdjustableGadget:
    """Selection game with ``2k-1`` parts to a ``k``-stage adjustable game.

    Helper variables and the cheat variable sit in the last stage.
    """
    phi = _require_sat_v(g)
    parts = g.k
    if parts % 2 == 0:
        raise MalformedGame("the adjustable gadget needs an odd number of selection moves")
    k = (parts + 1) // 2
    lay = _Layout.of(g)
    n = lay.n
    even = [i for i in range(2, parts + 1, 2)]
    nxt = 2 * parts * n
    helpers: dict[tuple[int, int], int] = {}
    for i in even:
        for j in range(n):
            helpers[i, j] = nxt
            nxt += 1
    s = nxt
    width = nxt + 1
    S = _lit(s)

    def u(i: int, j: int) -> int:
        return _lit(lay.u(i - 1, j))

    def w(i: int, j: int) -> int:
        return _lit(lay.w(i - 1, j))

    table = lay.table()
    l1 = _source_clauses(phi, table, (S,))
    l2: list[tuple[int, ...]] = []
    for (i, j), h in helpers.items():
        l2 += [(-_lit(h), u(i, j)), (-_lit(h), w(i, j))]
    l3 = [(-S, *(_lit(h) for h in helpers.values()))]
    l4: list[tuple[int, ...]] = []
    for i in range(1, parts + 1):
        for j in range(n):
            l4 += [(u(i, j), w(i, j), S), (-u(i, j), -w(i, j), S)]
    psi = CnfFormula(width, tuple(l1 + l2 + l3 + l4))
    base = InstanceBundle.of(get_problem("sat-v"), psi)
    stages = [lay.block(0)]
    vulnerable = 0
    for m in range(1, k):
        stages.append(lay.block(2 * m - 1) | lay.block(2 * m))
        vulnerable |= lay.block(2 * m - 1)
    stages[-1] |= bits.from_ids(list(helpers.values()) + [s])
    game = AdjustableGame(base, tuple(stages), vulnerable, n * (k - 1))
    families = {"l1": len(l1), "l2": len(l2), "l3": len(l3), "l4": len(l4)}
    return AdjustableGadget(game, table, n, families)


def gadget_selection_to_adjustable(g: SelectionGame) -> AdjustableGame:
    return build_adjustable_gadget(g).game


def gadget_pair(g: SelectionGame, kind: str, local: bool = False) -> LiftedGamePair:
    """``kind`` is ``interdiction`` or ``adjustable``."""
    if kind == "interdiction":
        built: InterdictionGadget | AdjustableGadget = build_interdiction_gadget(g, local)
        name = "interdiction-gadget-local" if local else "interdiction-gadget"
    elif kind == "adjustable":
        built, name = build_adjustable_gadget(g), "adjustable-gadget"
    else:
        raise ValueError(f"unknown gadget {kind!r}")
    return LiftedGamePair(g, built.game, Embedding(built.table, built.game.base.width), name)


def pad_selection(g: SelectionGame) -> SelectionGame:
    """Equalize part sizes with fresh variables that occur in no clause."""
    phi = _require_sat_v(g)
    lay = _Layout.of(g)
    extra = sum(lay.n - len(m) for m in lay.members)
    if not extra:
        return g
    padded = CnfFormula(phi.num_vars + extra, phi.clauses)
    nxt = phi.num_vars
    parts = []
    for p, row in zip(g.parts, lay.members):
        fill = lay.n - len(row)
        parts.append(p | bits.full_mask(fill) << nxt)
        nxt += fill
    return SelectionGame(InstanceBundle.of(g.base.problem, padded), tuple(parts))


# -- verification ----------------------------------------------------------------


class _Mimic:
    """Maps source moves to target moves and judges the end of a line."""

    def __init__(self, pair: LiftedGamePair, source: AlternatingGame, target: AlternatingGame) -> None:
        self.pair = pair
        self.source = source
        self.target = target

    def translate(self, step: int, move: int, history: list[int]) -> int:
        return self.pair.embedding.image(move)

    def final_ok(self, source_state: Any, target_state: Any, history: list[int]) -> bool:
        return True


class _LiftMimic(_Mimic):
    def final_ok(self, source_state: Any, target_state: Any, history: list[int]) -> bool:
        g = self.pair.source
        # Budget excess is decided by the same counts on both sides.
        if isinstance(g, InterdictionGame) and g.budget_mode == GLOBAL:
            _, sp, sb = source_state
            _, tp, tb = target_state
            return (sp.bit_count(), sb.bit_count()) == (tp.bit_count(), tb.bit_count())
        if isinstance(g, AdjustableGame):
            return source_state[3] == target_state[3]
        return True


class _InterdictionGadgetMimic(_Mimic):
    def __init__(self, pair: LiftedGamePair, source: AlternatingGame, target: AlternatingGame) -> None:
        super().__init__(pair, source, target)
        self.lay = _Layout.of(pair.source)
        self.game: InterdictionGame = pair.target

    def translate(self, step: int, move: int, history: list[int]) -> int:
        lay = self.lay
        if step == lay.parts - 1:
            return self.assignment(history + [move])
        if self.game.protector_moves_at(step + 1):
            return lay.honest(step, move, True)
        out = lay.honest(step, move, False)
        if step > 0:
            # Also block the unprotected partner left by the previous protector move.
            out |= lay.honest(step - 1, history[step - 1], False)
        return out

    def assignment(self, moves: list[int]) -> int:
        return bits.from_ids(
            i for step, m in enumerate(moves) for i in bits.bit_ids(self.lay.honest(step, m, True))
        )

    def final_ok(self, source_state: Any, target_state: Any, history: list[int]) -> bool:
        _, prot, block = target_state
        g = self.game
        if g.budget_mode == GLOBAL and (prot.bit_count() > g.budget_protector or block.bit_count() > g.budget_blocker):
            return False
        return not self.assignment(history) & block and not prot & block


class _AdjustableGadgetMimic(_Mimic):
    def __init__(self, pair: LiftedGamePair, source: AlternatingGame, target: AlternatingGame) -> None:
        super().__init__(pair, source, target)
        self.lay = _Layout.of(pair.source)

    def translate(self, step: int, move: int, history: list[int]) -> int:
        lay = self.lay
        if step % 2:
            return lay.honest(step, move, False)
        out = lay.honest(step, move, True)
        if step:
            out |= lay.honest(step - 1, history[step - 1], True)
        return out

    def final_ok(self, source_state: Any, target_state: Any, history: list[int]) -> bool:
        return target_state[3] <= self.pair.target.budget


def _mimic_for(pair: LiftedGamePair, source: AlternatingGame, target: AlternatingGame) -> _Mimic:
    if pair.provenance.startswith("interdiction-gadget"):
        return _InterdictionGadgetMimic(pair, source, target)
    if pair.provenance == "adjustable-gadget":
        return _AdjustableGadgetMimic(pair, source, target)
    return _LiftMimic(pair, source, target)


@dataclass
class VerificationReport:
    provenance: str
    source_winner: str
    target_winner: str
    source_first_wins: bool
    target_first_wins: bool
    source_nodes: int
    target_nodes: int
    lines_checked: int
    illegal_lines: int
    transcript: list[dict] = field(default_factory=list)
    truncated: bool = False

    @property
    def agree(self) -> bool:
        return self.source_first_wins == self.target_first_wins

    @property
    def passed(self) -> bool:
        return self.agree and self.illegal_lines == 0

    def to_dict(self) -> dict:
        return {
            "provenance": self.provenance,
            "source_winner": self.source_winner,
            "target_winner": self.target_winner,
            "agree": self.agree,
            "source_nodes": self.source_nodes,
            "target_nodes": self.target_nodes,
            "lines_checked": self.lines_checked,
            "illegal_lines": self.illegal_lines,
            "strategy_truncated": self.truncated,
            "passed": self.passed,
            "transcript": self.transcript,
        }


def _explore(
    node: StrategyNode,
    mimic: _Mimic,
    src_state: Any,
    tgt_state: Any,
    history: list[int],
    principal: bool,
    transcript: list[dict],
    tally: list[int],
) -> None:
    """Walk every line of the strategy tree, mapping each source move into the target."""
    src, tgt = mimic.source, mimic.target
    if node.kind in ("leaf", "truncated"):
        tally[0] += 1
        if node.kind == "leaf" and not mimic.final_ok(src_state, tgt_state, history):
            tally[1] += 1
        return
    chosen = node.moves if node.kind == "reply" else node.moves[:1]
    last = len(chosen) - 1
    for pos, (move, child) in enumerate(chosen):
        step = len(history)
        mapped = mimic.translate(step, move, history)
        final = tgt.outcome(tgt_state) is not None
        ok = final or tgt.legal(tgt_state, mapped)
        on_line = principal and pos == last
        if on_line:
            transcript.append(
                {
                    "move": step + 1,
                    "player": src.roles[node.player],
                    "source": src.labels(move),
                    "target": tgt.labels(mapped),
                    "legal": ok,
                    **({"final_selection": True} if final else {}),
                }
            )
        if not ok:
            tally[0] += 1
            tally[1] += 1
            continue
        next_tgt = tgt_state if final else tgt.play(tgt_state, mapped)
        _explore(child, mimic, src.play(src_state, move), next_tgt, history + [move], on_line, transcript, tally)


def verify_lift(pair: LiftedGamePair, cap: int = DEFAULT_CAP, threads: int = 1) -> VerificationReport:
    """Solve both games and replay the source strategy tree through the move map.

    The principal line follows the winner's choices and, at opponent
    nodes, the opponent's largest move; it is returned as the transcript.
    Every other line of the extracted tree is checked for legality too.
    """
    src_verdict, src_play = solve(pair.source, cap, threads)
    tgt_verdict, tgt_play = solve(pair.target, cap, threads)
    assert src_play is not None and tgt_play is not None
    transcript: list[dict] = []
    tally = [0, 0]
    if src_verdict.strategy is not None:
        mimic = _mimic_for(pair, src_play, tgt_play)
        _explore(src_verdict.strategy, mimic, src_play.initial(), tgt_play.initial(), [], True, transcript, tally)
    return VerificationReport(
        pair.provenance,
        src_verdict.winner,
        tgt_verdict.winner,
        src_verdict.first_player_wins,
        tgt_verdict.first_player_wins,
        src_verdict.nodes,
        tgt_verdict.nodes,
        tally[0],
        tally[1],
        transcript,
        src_verdict.truncated,
    )


__all__ = [
    "AdjustableGadget",
    "InterdictionGadget",
    "LiftedGamePair",
    "VerificationReport",
    "build_adjustable_gadget",
    "build_interdiction_gadget",
    "gadget_pair",
    "gadget_selection_to_adjustable",
    "gadget_selection_to_interdiction",
    "interdiction_budgets",
    "interdiction_parity",
    "lift",
    "lift_adjustable",
    "lift_interdiction",
    "lift_selection",
    "pad_selection",
    "play_for",
    "verify_lift",
]
