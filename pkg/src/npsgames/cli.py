"""Command-line front end.

Exit codes: 0 success or first-player win, 1 negative verdict or failed
check, 2 unknown reduction, problem or usage error, 3 unreadable input,
4 cap exceeded, 5 any other model error.  Reports go to stdout and
diagnostics (including timings) to stderr.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .core import DEFAULT_CAP, check_se_property
from .errors import CapExceeded, DecodeError, NpsError, UnknownProblem, UnknownReduction
from .games import solve
from .io import dumps, game_from_doc, game_to_doc, instance_from_doc, read_document
from .lifting import LiftedGamePair, gadget_pair, lift, verify_lift
from .problems.registry import PROBLEMS, TRANSFORMS
from .reductions import REDUCTIONS, parse_chain

EXIT_OK, EXIT_NO, EXIT_UNKNOWN, EXIT_DECODE, EXIT_CAP, EXIT_MODEL = 0, 1, 2, 3, 4, 5


def _emit(args: argparse.Namespace, report: dict, human: list[str]) -> None:
    if args.json:
        sys.stdout.write(dumps(report))
    else:
        sys.stdout.write("\n".join(human) + "\n")


def _write(path: str | None, doc: Any) -> None:
    if path:
        Path(path).write_text(dumps(doc))


def _read(path: str) -> Any:
    try:
        return read_document(path)
    except OSError as exc:
        raise DecodeError(f"cannot read {path}: {exc.strerror}") from None


def cmd_reduce(args: argparse.Namespace) -> int:
    red = parse_chain(args.via)
    inst = instance_from_doc(_read(args.input), red.source.name)
    reduced = red.apply(inst)
    emb = reduced.embedding
    doc = {
        "reduction": red.name,
        "source": inst.document(),
        "target": reduced.target.document(),
        "embedding": list(emb.table),
    }
    _write(args.output, doc)
    report = {
        "command": "reduce",
        "reduction": red.name,
        "source_digest": inst.digest(),
        "target_digest": reduced.target.digest(),
        "target_width": reduced.target.width,
        "embedding": {inst.labels[i]: reduced.target.labels[t] for i, t in enumerate(emb.table)},
    }
    if not args.output:
        report["document"] = doc
    human = [
        f"{red.name}: {inst.width} -> {reduced.target.width} elements",
        f"target digest {reduced.target.digest()}",
        "embedding: " + ", ".join(f"{inst.labels[i]}->{reduced.target.labels[t]}" for i, t in enumerate(emb.table)),
    ]
    if args.output:
        human.append(f"wrote {args.output}")
    else:
        human.append(dumps(doc).rstrip())
    _emit(args, report, human)
    return EXIT_OK


def cmd_check_se(args: argparse.Namespace) -> int:
    red = parse_chain(args.via)
    inst = instance_from_doc(_read(args.input), red.source.name)
    report = check_se_property(red, inst, args.cap, args.threads)
    body = {"command": "check-se", **report.to_dict()}
    human = [
        f"{red.name} on {inst.digest()}: {'PASS' if report.passed else 'FAIL'}",
        f"solutions: source {report.source_solutions}, target {report.target_solutions}",
        f"restricted per side: {len(report.embedded_images)} / {len(report.restricted_targets)}",
        f"set equality {report.equal}, yes-iff-yes {report.yes_iff_yes}",
    ]
    for key in ("missing_from_target", "extra_in_target"):
        for names in body[key]:
            human.append(f"{key.replace('_', ' ')}: {{{', '.join(names)}}}")
    _emit(args, body, human)
    return EXIT_OK if report.passed else EXIT_NO


def cmd_solve(args: argparse.Namespace) -> int:
    doc = _read(args.game)
    game = game_from_doc(doc)
    verdict, play = solve(game, args.cap, args.threads, memoize=not args.no_memo)
    root = verdict.root_move()
    labels = play.labels if play is not None else game.base.names
    body = {"command": "solve", "game": doc.get("game"), "base_digest": game.base.digest(),
            **verdict.to_dict(play if args.strategy else None)}
    if root is not None:
        body["root_move"] = labels(root)
    if "blocker" in body and isinstance(body["blocker"], int):
        body["blocker"] = game.base.names(body["blocker"])
    human = [f"{doc.get('game')} game on {game.base.problem.name} ({game.base.width} elements)",
             f"winner: {verdict.winner}", f"nodes: {verdict.nodes}"]
    if root is not None:
        human.append(f"{verdict.winner} opens with {{{', '.join(labels(root))}}}")
    for key in ("blocker", "value"):
        if key in body:
            human.append(f"{key}: {body[key]}")
    _emit(args, body, human)
    return EXIT_OK if verdict.first_player_wins else EXIT_NO


def cmd_lift(args: argparse.Namespace) -> int:
    doc = _read(args.game)
    if isinstance(doc, dict) and "provenance" in doc:
        pair = LiftedGamePair.from_dict(doc)
    elif args.gadget:
        pair = gadget_pair(game_from_doc(doc), args.gadget, args.local)
    elif args.via:
        pair = lift(parse_chain(args.via), game_from_doc(doc), args.cap)
    else:
        raise DecodeError("give --via CHAIN or --gadget NAME, or pass a lifted pair document")
    pair_doc = pair.to_dict()
    _write(args.output, pair_doc)
    body: dict[str, Any] = {
        "command": "lift",
        "provenance": pair.provenance,
        "source_digest": pair.source.base.digest(),
        "target_digest": pair.target.base.digest(),
        "target_width": pair.target.base.width,
    }
    human = [f"{pair.provenance}: {pair.source.base.width} -> {pair.target.base.width} elements"]
    if not args.output and not args.verify:
        body["pair"] = pair_doc
        human.append(dumps(pair_doc).rstrip())
    elif args.output:
        human.append(f"wrote {args.output}")
    code = EXIT_OK
    if args.verify:
        report = verify_lift(pair, args.cap, args.threads)
        body["verification"] = report.to_dict()
        human += [
            f"source winner {report.source_winner}, target winner {report.target_winner}",
            f"lines checked {report.lines_checked}, illegal {report.illegal_lines}",
            f"verification {'PASS' if report.passed else 'FAIL'}",
        ]
        for step in report.transcript:
            human.append(
                f"  move {step['move']} {step['player']}: {{{', '.join(step['source'])}}}"
                f" -> {{{', '.join(step['target'])}}}{'' if step['legal'] else ' ILLEGAL'}"
            )
        code = EXIT_OK if report.passed else EXIT_NO
    _emit(args, body, human)
    return code


def cmd_catalog(args: argparse.Namespace) -> int:
    problems = [{"name": p.name, "literal_based": p.literal_based, "summary": p.summary}
                for p in sorted(PROBLEMS.values(), key=lambda p: p.name)]
    edges = sorted(f"{a}>{b}" for a, b in REDUCTIONS)
    body = {"command": "catalog", "problems": problems, "reductions": edges,
            "transforms": sorted(TRANSFORMS)}
    human = ["problems:"] + [f"  {p['name']:<16} {p['summary']}" for p in problems]
    human += ["reductions:"] + [f"  {e}" for e in edges]
    human += ["transform prefixes: " + ", ".join(f"{t}:" for t in sorted(TRANSFORMS))]
    _emit(args, body, human)
    return EXIT_OK


def cmd_suite(args: argparse.Namespace) -> int:
    from .suite import SUITES, determinism, run_all

    numbers = [int(x) for x in args.only.split(",")] if args.only else None
    if numbers and any(n not in SUITES for n in numbers):
        raise UnknownProblem(f"suites are numbered {min(SUITES)}..{max(SUITES)}")
    if args.determinism:
        result = determinism(args.seed, args.cap, numbers)
        body = {"command": "suite", "determinism": {k: v for k, v in result.items() if k != "report"}}
        _emit(args, body, [f"determinism: {'PASS' if result['passed'] else 'FAIL'} ({result['bytes']} bytes)"])
        return EXIT_OK if result["passed"] else EXIT_NO
    report = run_all(args.seed, args.cap, args.threads, numbers)
    human = [f"{r['criterion']:>2} {'PASS' if r['passed'] else 'FAIL'}  {r['title']}" for r in report["suites"]]
    _emit(args, report, human)
    return EXIT_OK if report["passed"] else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest universe scanned exhaustively")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--seed", type=int, default=0, help="seed for generated instances")

    parser = argparse.ArgumentParser(prog="npsgames", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="apply a reduction chain")
    p.add_argument("input", help="instance JSON or DIMACS file ('-' for stdin)")
    p.add_argument("--via", required=True, help="chain such as 3sat-l>vertex-cover")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_reduce)

    p = sub.add_parser("check-se", parents=[common], help="check the embedding property on one instance")
    p.add_argument("input")
    p.add_argument("--via", required=True)
    p.set_defaults(run=cmd_check_se)

    p = sub.add_parser("solve", parents=[common], help="solve a game document")
    p.add_argument("game")
    p.add_argument("--strategy", action="store_true", help="include the strategy tree")
    p.add_argument("--no-memo", action="store_true")
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("lift", parents=[common], help="lift a game through a chain or a gadget")
    p.add_argument("game", help="game document, or a lifted pair to re-verify")
    how = p.add_mutually_exclusive_group()
    how.add_argument("--via")
    how.add_argument("--gadget", choices=("interdiction", "adjustable"))
    p.add_argument("--local", action="store_true", help="per-move budgets for the interdiction gadget")
    p.add_argument("--verify", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_lift)

    p = sub.add_parser("catalog", parents=[common], help="list problems and reductions")
    p.set_defaults(run=cmd_catalog)

    p = sub.add_parser("suite", parents=[common], help="run the acceptance suites")
    p.add_argument("--only", help="comma-separated suite numbers")
    p.add_argument("--determinism", action="store_true", help="run twice and compare the reports")
    p.set_defaults(run=cmd_suite)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.run(args)
    except (UnknownReduction, UnknownProblem) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_UNKNOWN
    except DecodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_DECODE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_CAP
    except NpsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        code = EXIT_MODEL
    print(f"[{args.command}] {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
