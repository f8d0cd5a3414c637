"""Command-line front end.

Exit status: 0 on success, 1 when a verification comes out false (verify,
check-strong, iso, a rejected replay), 2 on usage, input or size errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Monomial, canonical_order
from .board import Board, resolve_board
from .complex import are_isomorphic
from .errors import IllegalMoveError, PlacementError
from .play import BoardArena, IllegalComplexArena, LegalComplexArena, parse_moves, render_moves, replay
from .rulesets import ForbiddenRuleset, Ruleset, check_strong_placement, get_ruleset
from .transform import (
    export_bundle,
    game_polynomial,
    illegal_complex,
    illegal_ideal,
    legal_complex,
    legal_ideal,
    verify_duality,
)

VERBS = ("complex", "illegal", "ideals", "poly", "verify", "check-strong", "iso", "replay", "export")


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--game", "-g", required=True, help="trivial|snort|col|nogo|domineering|custom:<file>")
    common.add_argument("--board", "-b", help="path:N, cycle:N, grid:RxC or a board file")
    common.add_argument("--format", "-f", choices=("text", "json", "dot"), default="text")
    common.add_argument("--cap", type=int, help="board vertex cap (default 24, env PLACEMENT_COMPLEX_CAP)")

    parser = argparse.ArgumentParser(prog="placement-complex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("complex", parents=[common], help="facets of the legal complex")
    sub.add_parser("illegal", parents=[common], help="facets of the illegal complex")
    sub.add_parser("ideals", parents=[common], help="legal and illegal ideals")
    sub.add_parser("poly", parents=[common], help="game polynomial")
    sub.add_parser("verify", parents=[common], help="check the ideal/complex dualities")
    sub.add_parser("check-strong", parents=[common], help="exhaustive hereditary-legality check")
    iso = sub.add_parser("iso", parents=[common], help="compare two legal complexes")
    iso.add_argument("--other-game", required=True)
    iso.add_argument("--other-board", help="defaults to --board")
    rep = sub.add_parser("replay", parents=[common], help="replay a move sequence")
    rep.add_argument("--moves", required=True, help='e.g. "L:x1 R:y3 L:x4"')
    rep.add_argument("--arena", choices=("board", "legal", "illegal"), default="board")
    sub.add_parser("export", parents=[common], help="everything about one game/board")
    return parser


def _resolve(game: str, board_desc: str | None) -> tuple[Ruleset, Board]:
    try:
        ruleset = get_ruleset(game)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    except OSError as exc:
        raise UsageError(f"cannot read ruleset file: {exc}") from None
    if board_desc is None:
        if not isinstance(ruleset, ForbiddenRuleset):
            raise UsageError("--board is required")
        # custom rulesets ignore the board; give one cell per index
        return ruleset, Board(max((v.index for v in ruleset.variables), default=1))
    try:
        return ruleset, resolve_board(board_desc)
    except OSError as exc:
        raise UsageError(f"cannot read board file: {exc}") from None


def _render_complex(delta, fmt: str, name: str) -> str:
    if fmt == "json":
        return delta.to_json() + "\n"
    if fmt == "dot":
        return delta.to_dot(name)
    return "".join("*".join(map(str, f)) + "\n" for f in _monomial_rows(delta))


def _monomial_rows(delta):
    return [list(m) for m in canonical_order(Monomial(f) for f in delta.facets)]


def execute(argv: list[str]) -> tuple[int, str]:
    """Run one command; returns (exit status, stdout text).  Errors go in the text."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        return _dispatch(args)
    except (UsageError, PlacementError, ValueError) as exc:
        return 2, f"error: {exc}\n"


def _dispatch(args) -> tuple[int, str]:
    ruleset, board = _resolve(args.game, args.board)
    fmt, cap = args.format, args.cap
    verb = args.verb

    if verb == "complex":
        return 0, _render_complex(legal_complex(ruleset, board, cap), fmt, "legal")
    if verb == "illegal":
        return 0, _render_complex(illegal_complex(ruleset, board, cap), fmt, "illegal")
    if verb == "ideals":
        il, ii = legal_ideal(ruleset, board, cap), illegal_ideal(ruleset, board, cap)
        if fmt == "json":
            doc = {
                "legal_ideal": [str(m) for m in il.sorted_generators()],
                "illegal_ideal": [str(m) for m in ii.sorted_generators()],
            }
            return 0, json.dumps(doc, indent=2) + "\n"
        return 0, f"I_legal = {il}\nI_illegal = {ii}\n"
    if verb == "poly":
        poly = game_polynomial(ruleset, board, cap)
        if fmt == "json":
            return 0, json.dumps({"coefficients": list(poly.coefficients), "total": poly(1)}) + "\n"
        return 0, f"{poly}\n"
    if verb == "verify":
        report = verify_duality(ruleset, board, cap)
        code = 0 if report.ok else 1
        if fmt == "json":
            return code, json.dumps(report.to_dict(), indent=2) + "\n"
        lines = [report.summary()]
        for clause, diff in report.mismatches.items():
            lines.append(f"  {clause}: only left {diff['only_left']}, only right {diff['only_right']}")
        return code, "\n".join(lines) + "\n"
    if verb == "check-strong":
        res = check_strong_placement(ruleset, board, cap)
        if fmt == "json":
            doc = {
                "strong_placement": res.holds,
                "legal_position": None if res.legal_position is None else str(res.legal_position),
                "illegal_subposition": None if res.illegal_subposition is None else str(res.illegal_subposition),
            }
            return (0 if res else 1), json.dumps(doc) + "\n"
        if res:
            return 0, "strong placement: yes\n"
        return 1, (
            f"strong placement: no (legal {res.legal_position} "
            f"has illegal subposition {res.illegal_subposition})\n"
        )
    if verb == "iso":
        other_rules, other_board = _resolve(args.other_game, args.other_board or args.board)
        a = legal_complex(ruleset, board, cap)
        b = legal_complex(other_rules, other_board, cap)
        res = are_isomorphic(a, b)
        if fmt == "json":
            wit = None if res.witness is None else {str(k): str(v) for k, v in sorted(res.witness.items())}
            return (0 if res else 1), json.dumps({"isomorphic": res.found, "witness": wit}) + "\n"
        if not res:
            return 1, "isomorphic: no\n"
        body = "".join(f"  {k} -> {v}\n" for k, v in sorted(res.witness.items()))
        return 0, "isomorphic: yes\n" + body
    if verb == "replay":
        if args.arena == "board":
            arena = BoardArena(ruleset, board)
        elif args.arena == "legal":
            arena = LegalComplexArena(legal_complex(ruleset, board, cap))
        else:
            arena = IllegalComplexArena(illegal_complex(ruleset, board, cap))
        moves = parse_moves(args.moves)
        try:
            state = replay(arena, moves)
        except IllegalMoveError as exc:
            return 1, f"{exc.reason}\n"
        if fmt == "json":
            return 0, json.dumps({"moves": render_moves(state.history), "position": str(state.position())}) + "\n"
        return 0, f"accepted: {render_moves(state.history)}\nposition: {state.position()}\n"
    if verb == "export":
        bundle = export_bundle(ruleset, board, cap)
        if fmt == "dot":
            return 0, legal_complex(ruleset, board, cap).to_dot("legal") + illegal_complex(
                ruleset, board, cap
            ).to_dot("illegal")
        if fmt == "text":
            lines = [f"{k}: {v}" for k, v in bundle.items()]
            return 0, "\n".join(lines) + "\n"
        return 0, json.dumps(bundle, indent=2) + "\n"
    raise UsageError(f"unknown verb {verb}")


def main(argv: list[str] | None = None) -> int:
    code, out = execute(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == 2 else sys.stdout
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
