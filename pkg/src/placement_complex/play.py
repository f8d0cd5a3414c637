"""Playing a game on its board, on its legal complex, or on its illegal complex.

Moves are named by variables (``x3`` is Left's third basic position) in all
three arenas, so a move sequence transfers verbatim between them.  No
alternation is imposed: one player may move several times in a row.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Monomial, Player, Variable
from .board import Board
from .complex import SimplicialComplex, sort_sets
from .errors import DomainError, IllegalMoveError
from .limits import check_vertices
from .rulesets import Ruleset
from .transform import illegal_complex as _illegal_complex
from .transform import legal_complex as _legal_complex

Move = tuple[Player, Variable]


class Arena:
    kind = "arena"
    variables: tuple[Variable, ...] = ()

    def violation(self, occupied: frozenset[Variable]) -> str | None:
        """Why ``occupied`` is not a reachable position here, or None if it is."""
        raise NotImplementedError


class BoardArena(Arena):
    kind = "board"

    def __init__(self, ruleset: Ruleset, board: Board):
        self.ruleset = ruleset
        self.board = board
        self.game = ruleset.compile(board)
        self.variables = self.game.variables

    def violation(self, occupied):
        mask = self.game.mask_of(occupied)
        if self.game.is_legal_mask(mask):
            return None
        taken: dict[int, Variable] = {}
        for v in sorted(occupied):
            for c in sorted(self.game.basic_position(v).cells):
                if c in taken:
                    return f"cell {c} is already occupied by {taken[c]}"
                taken[c] = v
        return f"{self.ruleset.name} rules forbid the position {Monomial(occupied)}"


class LegalComplexArena(Arena):
    """Legal Ruleset: the occupied set must stay a face of the complex."""

    kind = "legal"

    def __init__(self, delta: SimplicialComplex):
        self.complex = delta
        self.variables = tuple(sorted(delta.vertices, key=lambda v: (v.player, v.index)))

    def violation(self, occupied):
        if self.complex.is_face(occupied):
            return None
        return f"{Monomial(occupied)} is not a face of the legal complex"


class IllegalComplexArena(Arena):
    """Illegal Ruleset: no facet may have all of its vertices occupied."""

    kind = "illegal"

    def __init__(self, gamma: SimplicialComplex):
        self.complex = gamma
        self.variables = tuple(sorted(gamma.vertices, key=lambda v: (v.player, v.index)))
        self._facets = [frozenset(f) for f in sort_sets(gamma.facets)]

    def violation(self, occupied):
        for f in self._facets:
            if f <= occupied:
                return f"every vertex of facet {Monomial(f)} would be occupied"
        return None


@dataclass(frozen=True)
class MatchState:
    arena: Arena
    history: tuple[Move, ...] = ()

    @property
    def occupied(self) -> frozenset[Variable]:
        return frozenset(v for _, v in self.history)

    def position(self) -> Monomial:
        return Monomial(self.occupied)


def new_match(arena: Arena) -> MatchState:
    return MatchState(arena)


def legal_moves(state: MatchState, player: Player) -> set[Variable]:
    occ = state.occupied
    arena = state.arena
    return {
        v
        for v in arena.variables
        if v.player is player and v not in occ and arena.violation(occ | {v}) is None
    }


def apply_move(state: MatchState, player: Player, v: Variable) -> MatchState:
    arena = state.arena
    if v not in arena.variables:
        raise IllegalMoveError(f"{v} is not a vertex of this {arena.kind} arena")
    if v.player is not player:
        raise IllegalMoveError(f"{player.name.title()} may not play {v}: wrong side")
    if v in state.occupied:
        raise IllegalMoveError(f"{v} is already occupied")
    reason = arena.violation(state.occupied | {v})
    if reason is not None:
        raise IllegalMoveError(reason)
    return MatchState(arena, state.history + ((player, v),))


def parse_moves(text: str) -> list[Move]:
    """Parse ``"L:x1 R:y3 L:x4"``."""
    out = []
    for tok in text.split():
        side, sep, var = tok.partition(":")
        if not sep or side.upper() not in ("L", "R"):
            raise ValueError(f"bad move token {tok!r}; expected L:<var> or R:<var>")
        out.append((Player.LEFT if side.upper() == "L" else Player.RIGHT, Variable.parse(var)))
    return out


def render_moves(moves: Iterable[Move]) -> str:
    return " ".join(f"{p.short}:{v}" for p, v in moves)


def replay(arena: Arena, moves: Sequence[Move]) -> MatchState:
    state = new_match(arena)
    for k, (p, v) in enumerate(moves, start=1):
        try:
            state = apply_move(state, p, v)
        except IllegalMoveError as exc:
            raise IllegalMoveError(f"move {k} ({p.short}:{v}) rejected: {exc.reason}") from None
    return state


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    counterexample: tuple[Move, ...] | None = None
    positions_checked: int = 0

    def __bool__(self) -> bool:
        return self.equivalent


def _complex_masks(delta: SimplicialComplex, universe) -> list[int]:
    out = []
    for f in delta.facets:
        for v in f:
            if v not in universe:
                raise DomainError(f"complex vertex {v} is not a variable of the game")
        out.append(universe.mask(f))
    return out


def check_equivalence(
    ruleset: Ruleset,
    board: Board,
    depth: int | None = None,
    *,
    legal_complex: SimplicialComplex | None = None,
    illegal_complex: SimplicialComplex | None = None,
    cap: int | None = None,
) -> EquivalenceResult:
    """Compare playable move sets on the board, on Delta and on Gamma.

    Legality of a placement position depends only on the set of pieces, so the
    search runs over positions level by level rather than over orderings.  A
    position is expanded only when all three arenas accept it; the first move
    on which they disagree is returned together with a sequence reaching it.
    ``legal_complex`` / ``illegal_complex`` replace the computed complexes.
    """
    check_vertices(board.vertex_count, cap)
    game = ruleset.compile(board)
    uni = game.universe
    delta = legal_complex if legal_complex is not None else _legal_complex(ruleset, board, cap)
    gamma = illegal_complex if illegal_complex is not None else _illegal_complex(ruleset, board, cap)
    delta_masks = _complex_masks(delta, uni)
    gamma_masks = _complex_masks(gamma, uni)
    n = len(uni)
    depth = n if depth is None else min(depth, n)

    def verdicts(mask: int) -> tuple[bool, bool, bool]:
        on_board = game.is_legal_mask(mask)
        on_delta = any(mask & ~f == 0 for f in delta_masks)
        on_gamma = not any(g & mask == g for g in gamma_masks)
        return on_board, on_delta, on_gamma

    if len(set(verdicts(0))) != 1:
        return EquivalenceResult(False, (), 1)
    frontier: dict[int, tuple[Move, ...]] = {0: ()}
    seen = {0}
    checked = 1
    for _ in range(depth):
        nxt: dict[int, tuple[Move, ...]] = {}
        for mask, seq in frontier.items():
            for i in range(n):
                b = 1 << i
                if mask & b:
                    continue
                c = mask | b
                if c in seen:
                    continue
                seen.add(c)
                checked += 1
                v = uni.variables[i]
                res = verdicts(c)
                if len(set(res)) != 1:
                    return EquivalenceResult(False, seq + ((v.player, v),), checked)
                if res[0]:
                    nxt[c] = seq + ((v.player, v),)
        frontier = nxt
        if not frontier:
            break
    return EquivalenceResult(True, None, checked)


def random_playouts(
    ruleset: Ruleset,
    board: Board,
    trials: int = 50,
    seed: int = 0,
    cap: int | None = None,
) -> EquivalenceResult:
    """Play random move orders through the MatchState engine in all three arenas.

    At every step the three arenas must offer the same moves to both players.
    This exercises ``legal_moves`` / ``apply_move`` themselves, which the
    set-based :func:`check_equivalence` bypasses.
    """
    arenas = [
        BoardArena(ruleset, board),
        LegalComplexArena(_legal_complex(ruleset, board, cap)),
        IllegalComplexArena(_illegal_complex(ruleset, board, cap)),
    ]
    rng = random.Random(seed)
    steps = 0
    for _ in range(trials):
        states = [new_match(a) for a in arenas]
        while True:
            options = []
            for p in (Player.LEFT, Player.RIGHT):
                sets = [legal_moves(s, p) for s in states]
                steps += 1
                if any(s != sets[0] for s in sets[1:]):
                    odd = min(set().union(*sets) - set.intersection(*sets))
                    return EquivalenceResult(False, states[0].history + ((p, odd),), steps)
                options += [(p, v) for v in sorted(sets[0])]
            if not options:
                break
            p, v = rng.choice(options)
            states = [apply_move(s, p, v) for s in states]
    return EquivalenceResult(True, None, steps)
