"""JSON documents for instances and games, plus DIMACS input."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from . import bits
from .core import InstanceBundle
from .errors import DecodeError, NpsError
from .games import (
    AdjustableGame,
    CostInterdiction,
    InterdictionGame,
    SelectionGame,
    SimpleInterdiction,
    TwoStageCostGame,
)
from .problems.dimacs import parse_dimacs
from .problems.payloads import _int, _int_list, _require
from .problems.registry import get_problem

SAT_NAMES = ("sat-v", "sat-l", "3sat-v", "3sat-l")


def dumps(doc: Any) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def read_document(path: str | Path) -> Any:
    text = Path(path).read_text() if str(path) != "-" else __import__("sys").stdin.read()
    return parse_text(text)


def parse_text(text: str) -> Any:
    """JSON document, or a DIMACS formula when the text is not JSON."""
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise DecodeError(f"invalid JSON: {exc}") from None
    return parse_dimacs(text)


def instance_from_doc(doc: Any, problem: str | None = None) -> InstanceBundle:
    """Decode ``{"problem", "payload"}``; a bare DIMACS formula needs ``problem`` (default sat-v)."""
    from .problems.payloads import CnfFormula

    if isinstance(doc, CnfFormula):
        name = problem or "sat-v"
        if name not in SAT_NAMES:
            raise DecodeError(f"a DIMACS formula cannot be read as {name}")
        spec = get_problem(name)
        return InstanceBundle.of(spec, spec.decode(spec.encode(doc)))
    if not isinstance(doc, Mapping):
        raise DecodeError("an instance document must be a JSON object")
    name = doc.get("problem", problem)
    if not isinstance(name, str):
        raise DecodeError("missing field 'problem'")
    spec = get_problem(name)
    try:
        payload = spec.decode(_require(doc, "payload"))
    except NpsError:
        raise
    except (TypeError, ValueError, KeyError, IndexError) as exc:
        raise DecodeError(f"bad {name} payload: {exc}") from None
    try:
        return InstanceBundle.of(spec, payload)
    except ValueError as exc:
        raise DecodeError(str(exc)) from None


def _ids(mask: int) -> list[int]:
    return bits.bit_ids(mask)


def _mask(value: Any, what: str, width: int) -> int:
    ids = _int_list(value, what)
    if any(i < 0 or i >= width for i in ids):
        raise DecodeError(f"{what}: element id out of range 0..{width - 1}")
    return bits.from_ids(ids)


def _masks(value: Any, what: str, width: int) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise DecodeError(f"{what} must be a list of id lists")
    return tuple(_mask(v, what, width) for v in value)


def _ints(value: Any, what: str) -> tuple[int, ...]:
    return tuple(_int_list(value, what))


def game_to_doc(game: Any) -> dict:
    base = game.base.document()
    if isinstance(game, SelectionGame):
        return {"game": "selection", "base": base, "parts": [_ids(p) for p in game.parts]}
    if isinstance(game, InterdictionGame):
        return {
            "game": "interdiction",
            "base": base,
            "nested": [_ids(c) for c in game.nested],
            "budget_protector": game.budget_protector,
            "budget_blocker": game.budget_blocker,
            "budget_mode": game.budget_mode,
        }
    if isinstance(game, SimpleInterdiction):
        return {"game": "interdiction-simple", "base": base, "vulnerable": _ids(game.vulnerable), "budget": game.budget}
    if isinstance(game, CostInterdiction):
        return {"game": "interdiction-cost", "base": base, "costs": list(game.costs), "threshold": game.threshold}
    if isinstance(game, AdjustableGame):
        return {
            "game": "adjustable",
            "base": base,
            "stages": [_ids(s) for s in game.stages],
            "vulnerable": _ids(game.vulnerable),
            "budget": game.budget,
        }
    if isinstance(game, TwoStageCostGame):
        return {
            "game": "two-stage-cost",
            "base": base,
            "c1": list(game.c1),
            "c2_low": list(game.c2_low),
            "c2_high": list(game.c2_high),
            "threshold": game.threshold,
            "budget": game.budget,
        }
    raise TypeError(f"not a game: {type(game).__name__}")


def game_from_doc(doc: Any) -> Any:
    if not isinstance(doc, Mapping):
        raise DecodeError("a game document must be a JSON object")
    kind = _require(doc, "game")
    base = instance_from_doc(_require(doc, "base"))
    w = base.width
    if kind == "selection":
        return SelectionGame(base, _masks(_require(doc, "parts"), "parts", w))
    if kind == "interdiction":
        mode = doc.get("budget_mode", "global")
        return InterdictionGame(
            base,
            _masks(_require(doc, "nested"), "nested", w),
            _int(_require(doc, "budget_protector"), "budget_protector"),
            _int(_require(doc, "budget_blocker"), "budget_blocker"),
            mode,
        )
    if kind == "interdiction-simple":
        return SimpleInterdiction(base, _mask(_require(doc, "vulnerable"), "vulnerable", w), _int(_require(doc, "budget"), "budget"))
    if kind == "interdiction-cost":
        costs = _ints(_require(doc, "costs"), "costs")
        if len(costs) != w:
            raise DecodeError("one cost per universe element required")
        return CostInterdiction(base, costs, _int(_require(doc, "threshold"), "threshold"))
    if kind == "adjustable":
        return AdjustableGame(
            base,
            _masks(_require(doc, "stages"), "stages", w),
            _mask(_require(doc, "vulnerable"), "vulnerable", w),
            _int(_require(doc, "budget"), "budget"),
        )
    if kind == "two-stage-cost":
        return TwoStageCostGame(
            base,
            _ints(_require(doc, "c1"), "c1"),
            _ints(_require(doc, "c2_low"), "c2_low"),
            _ints(_require(doc, "c2_high"), "c2_high"),
            _int(_require(doc, "threshold"), "threshold"),
            _int(_require(doc, "budget"), "budget"),
        )
    raise DecodeError(f"unknown game kind {kind!r}")
