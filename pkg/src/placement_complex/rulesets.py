"""Placement-game rulesets.

A ruleset does two things for a given board: it lists the basic positions
(one piece of one player, occupying some cells), and it decides whether a set
of basic positions is a legal position.  ``Ruleset.compile`` binds a ruleset
to a board and returns a :class:`PlacementGame`, which evaluates legality on
bitmasks over the game's variable universe (Left variables first, then Right).

Double occupancy is illegal in every board game here, Trivial included, so
``{x_i, y_i}`` is always a minimal illegal position for single-vertex games.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Callable, Iterable

from .algebra import Monomial, MonomialIdeal, Player, Universe, Variable, minimal_generators
from .board import Board
from .errors import DomainError, MonomialParseError, UnsupportedBoardError
from .limits import EXHAUSTIVE_VARIABLE_CAP, check_variables, check_vertices

__all__ = [
    "BasicPosition",
    "PlacementGame",
    "Ruleset",
    "Trivial",
    "Snort",
    "Col",
    "NoGo",
    "Domineering",
    "PredicateRuleset",
    "ForbiddenRuleset",
    "FaceRuleset",
    "BUILTIN",
    "get_ruleset",
    "parse_custom_ruleset",
    "load_custom_ruleset",
    "basic_positions",
    "is_legal",
    "StrongCheck",
    "check_strong_placement",
    "Player",
]


@dataclass(frozen=True)
class BasicPosition:
    player: Player
    cells: frozenset[int]
    index: int

    @property
    def variable(self) -> Variable:
        return Variable(self.index, self.player)

    def __str__(self) -> str:
        return str(self.variable)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _nbr_union(mask: int, nbr: tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= nbr[low.bit_length() - 1]
        mask ^= low
    return out


class PlacementGame:
    """A ruleset bound to a board."""

    def __init__(self, ruleset: Ruleset, board: Board, basic: Iterable[BasicPosition]):
        self.ruleset = ruleset
        self.board = board
        basic = list(basic)
        left = sorted((b for b in basic if b.player is Player.LEFT), key=lambda b: b.index)
        right = sorted((b for b in basic if b.player is Player.RIGHT), key=lambda b: b.index)
        self.basic: tuple[BasicPosition, ...] = tuple(left + right)
        self.universe = Universe(b.variable for b in self.basic)
        self.left_mask = (1 << len(left)) - 1
        self.right_mask = self.universe.full_mask ^ self.left_mask
        self.cell_masks = tuple(_cells_mask(b.cells) for b in self.basic)
        self._by_var = {b.variable: b for b in self.basic}

    def __repr__(self) -> str:
        return f"PlacementGame({self.ruleset.name}, n={self.board.vertex_count})"

    @property
    def variables(self) -> tuple[Variable, ...]:
        return self.universe.variables

    def side(self, player: Player) -> tuple[Variable, ...]:
        return tuple(v for v in self.variables if v.player is player)

    def basic_position(self, v: Variable) -> BasicPosition:
        return self._by_var[v]

    def mask_of(self, position) -> int:
        """Accepts a Monomial or an iterable of Variables / BasicPositions."""
        if isinstance(position, Monomial):
            position = position.vars
        m = 0
        for item in position:
            if isinstance(item, BasicPosition):
                own = self._by_var.get(item.variable)
                if own != item:
                    raise DomainError(f"basic position {item} does not belong to this board")
                item = item.variable
            m |= self.universe.bit(item)
        return m

    def monomial(self, mask: int) -> Monomial:
        return self.universe.monomial(mask)

    def occupancy(self, mask: int) -> tuple[int, int] | None:
        """Cells covered by Left and by Right, or None when two pieces overlap."""
        left = right = 0
        cells = self.cell_masks
        for i in _bits(mask):
            c = cells[i]
            if (left | right) & c:
                return None
            if (1 << i) & self.left_mask:
                left |= c
            else:
                right |= c
        return left, right

    def is_legal_mask(self, mask: int) -> bool:
        return self.ruleset.legal_mask(self, mask)

    def is_legal(self, position) -> bool:
        return self.is_legal_mask(self.mask_of(position))


def _cells_mask(cells: Iterable[int]) -> int:
    m = 0
    for c in cells:
        m |= 1 << (c - 1)
    return m


class Ruleset:
    """Base ruleset: every piece covers its cells, and overlapping pieces are illegal.

    Subclasses supply ``basic_positions`` and ``occupancy_rule``.
    """

    name: str = "ruleset"

    def __init__(self):
        self._compiled: dict[Board, PlacementGame] = {}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"

    @property
    def cache_key(self) -> tuple:
        return (type(self).__name__, self.name)

    def basic_positions(self, board: Board) -> list[BasicPosition]:
        raise NotImplementedError

    def occupancy_rule(self, board: Board, left: int, right: int) -> bool:
        """Game-specific condition on the Left/Right occupied-cell bitmasks."""
        return True

    def legal_mask(self, game: PlacementGame, mask: int) -> bool:
        occ = game.occupancy(mask)
        if occ is None:
            return False
        return self.occupancy_rule(game.board, *occ)

    def compile(self, board: Board) -> PlacementGame:
        game = self._compiled.get(board)
        if game is None:
            game = PlacementGame(self, board, self.basic_positions(board))
            self._compiled[board] = game
        return game

    def is_legal(self, board: Board, position) -> bool:
        return self.compile(board).is_legal(position)


class VertexRuleset(Ruleset):
    """Games whose pieces occupy one vertex: x_i and y_i both sit on vertex i."""

    def basic_positions(self, board: Board) -> list[BasicPosition]:
        return [
            BasicPosition(p, frozenset([v]), v)
            for p in (Player.LEFT, Player.RIGHT)
            for v in board.vertices
        ]

    def legal_mask(self, game: PlacementGame, mask: int) -> bool:
        # universe is x1..xn y1..yn, so the halves of the mask are the occupied cells
        n = game.board.vertex_count
        left = mask & game.left_mask
        right = mask >> n
        if left & right:
            return False
        return self.occupancy_rule(game.board, left, right)


class Trivial(VertexRuleset):
    name = "trivial"


class Snort(VertexRuleset):
    """No piece next to an opponent's piece."""

    name = "snort"

    def occupancy_rule(self, board, left, right):
        return not (_nbr_union(left, board.neighbor_masks) & right)


class Col(VertexRuleset):
    """No piece next to one of the same player's pieces."""

    name = "col"

    def occupancy_rule(self, board, left, right):
        nbr = board.neighbor_masks
        return not (_nbr_union(left, nbr) & left) and not (_nbr_union(right, nbr) & right)


class NoGo(VertexRuleset):
    """Every single-player connected group must touch an empty vertex (both players checked)."""

    name = "nogo"

    def occupancy_rule(self, board, left, right):
        nbr = board.neighbor_masks
        empty = ((1 << board.vertex_count) - 1) & ~(left | right)
        return _groups_breathe(left, empty, nbr) and _groups_breathe(right, empty, nbr)


def _groups_breathe(occ: int, empty: int, nbr: tuple[int, ...]) -> bool:
    remaining = occ
    while remaining:
        group = frontier = remaining & -remaining
        while frontier:
            frontier = _nbr_union(frontier, nbr) & occ & ~group
            group |= frontier
        if not _nbr_union(group, nbr) & empty:
            return False
        remaining &= ~group
    return True


class Domineering(Ruleset):
    """Left places vertical dominoes, Right horizontal ones; grid boards only."""

    name = "domineering"

    def basic_positions(self, board: Board) -> list[BasicPosition]:
        if board.grid_shape is None:
            raise UnsupportedBoardError("domineering needs a board built with make_grid")
        rows, cols = board.grid_shape
        out = []
        k = 0
        for r in range(1, rows):
            for c in range(1, cols + 1):
                k += 1
                out.append(BasicPosition(Player.LEFT, frozenset([board.cell(r, c), board.cell(r + 1, c)]), k))
        k = 0
        for r in range(1, rows + 1):
            for c in range(1, cols):
                k += 1
                out.append(BasicPosition(Player.RIGHT, frozenset([board.cell(r, c), board.cell(r, c + 1)]), k))
        return out


class PredicateRuleset(VertexRuleset):
    """Single-vertex pieces with an arbitrary legality predicate on positions.

    Nothing else is enforced, not even disjointness; used to build deliberately
    broken rulesets in tests.
    """

    def __init__(self, name: str, predicate: Callable[[Board, Monomial], bool]):
        super().__init__()
        self.name = name
        self.predicate = predicate

    @property
    def cache_key(self) -> tuple:
        return ("predicate", self.name, id(self.predicate))

    def legal_mask(self, game, mask):
        return bool(self.predicate(game.board, game.monomial(mask)))


class _VariableRuleset(Ruleset):
    """Ruleset over an explicit variable set; x_i and y_i are placed on cell i."""

    variables: tuple[Variable, ...] = ()

    def basic_positions(self, board: Board) -> list[BasicPosition]:
        return [BasicPosition(v.player, frozenset([v.index]), v.index) for v in self.variables]


class ForbiddenRuleset(_VariableRuleset):
    """Legal iff no listed minimal illegal monomial divides the position.

    This is both the custom-file ruleset and the Illegal Ruleset played on an
    illegal complex (its facets are the forbidden monomials).
    """

    def __init__(self, forbidden: MonomialIdeal, name: str = "forbidden"):
        super().__init__()
        self.name = name
        self.forbidden = forbidden
        self.variables = tuple(sorted(forbidden.universe, key=lambda v: (v.player, v.index)))

    @cached_property
    def cache_key(self) -> tuple:
        digest = hashlib.sha256(
            (" ".join(map(str, self.variables)) + "|" + forbidden_text(self.forbidden)).encode()
        ).hexdigest()
        return ("forbidden", self.name, digest)

    def legal_mask(self, game, mask):
        if not hasattr(game, "_forbidden_masks"):
            game._forbidden_masks = tuple(game.universe.mask(g.vars) for g in self.forbidden.generators)
        return not any(g & mask == g for g in game._forbidden_masks)


def forbidden_text(ideal: MonomialIdeal) -> str:
    return ideal.render()


class FaceRuleset(_VariableRuleset):
    """Legal iff the position is a face of the given complex (the Legal Ruleset)."""

    def __init__(self, complex_, name: str = "faces"):
        super().__init__()
        self.name = name
        self.complex = complex_
        for v in complex_.vertices:
            if not isinstance(v, Variable):
                raise DomainError(f"complex vertex {v!r} is not a game variable")
        self.variables = tuple(sorted(complex_.vertices, key=lambda v: (v.player, v.index)))

    @cached_property
    def cache_key(self) -> tuple:
        facets = sorted(str(Monomial(f)) for f in self.complex.facets)
        digest = hashlib.sha256("|".join(facets).encode()).hexdigest()
        return ("faces", self.name, digest)

    def legal_mask(self, game, mask):
        return self.complex.is_face(game.universe.variables_of(mask))


BUILTIN: dict[str, type[Ruleset]] = {
    "trivial": Trivial,
    "snort": Snort,
    "col": Col,
    "nogo": NoGo,
    "domineering": Domineering,
}

_INSTANCES: dict[str, Ruleset] = {}


def get_ruleset(name: str) -> Ruleset:
    """Builtin ruleset by name, or ``custom:<file>`` for a minimal-illegal ruleset file."""
    if name.startswith("custom:"):
        return load_custom_ruleset(name.split(":", 1)[1])
    key = name.lower()
    if key not in BUILTIN:
        raise KeyError(f"unknown game {name!r}; choose from {', '.join(BUILTIN)} or custom:<file>")
    if key not in _INSTANCES:
        _INSTANCES[key] = BUILTIN[key]()
    return _INSTANCES[key]


_RANGE_RE = re.compile(r"([xy])(\d+)\.\.([xy])(\d+)")


def _parse_header(header: str) -> list[Variable]:
    out: list[Variable] = []
    for tok in header.split():
        m = _RANGE_RE.fullmatch(tok)
        if m:
            if m.group(1) != m.group(3):
                raise MonomialParseError(f"range {tok!r} mixes players")
            player = Player.LEFT if m.group(1) == "x" else Player.RIGHT
            out += [Variable(i, player) for i in range(int(m.group(2)), int(m.group(4)) + 1)]
        else:
            out.append(Variable.parse(tok))
    if len(set(out)) != len(out):
        raise MonomialParseError("variable declared twice in header")
    return out


def parse_custom_ruleset(text: str, name: str = "custom") -> ForbiddenRuleset:
    """Parse a ``vars: x1..xN y1..yM`` header followed by one minimal illegal monomial per line."""
    header = None
    monos = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            if not line.startswith("vars:"):
                raise MonomialParseError("custom ruleset must start with a 'vars:' line")
            header = _parse_header(line[len("vars:"):])
            continue
        monos.append(Monomial.parse(line))
    if header is None:
        raise MonomialParseError("custom ruleset is empty")
    universe = Universe(sorted(header, key=lambda v: (v.player, v.index)))
    return ForbiddenRuleset(minimal_generators(monos, universe), name=name)


def load_custom_ruleset(path) -> ForbiddenRuleset:
    path = Path(path)
    return parse_custom_ruleset(path.read_text(), name=f"custom:{path.name}")


def basic_positions(ruleset: Ruleset, board: Board) -> list[BasicPosition]:
    return list(ruleset.compile(board).basic)


def is_legal(ruleset: Ruleset, board: Board, position) -> bool:
    return ruleset.is_legal(board, position)


@dataclass(frozen=True)
class StrongCheck:
    holds: bool
    legal_position: Monomial | None = None
    illegal_subposition: Monomial | None = None

    def __bool__(self) -> bool:
        return self.holds


def check_strong_placement(ruleset: Ruleset, board: Board, cap: int | None = None) -> StrongCheck:
    """Exhaustively test that every subposition of a legal position is legal.

    Scans all ``2^n`` variable subsets, so it is bounded by
    ``EXHAUSTIVE_VARIABLE_CAP`` as well as the board cap.  The counterexample
    is the first legal position in mask order with an illegal one-smaller
    subposition (the canonically smallest such subposition is reported).
    """
    check_vertices(board.vertex_count, cap)
    game = ruleset.compile(board)
    n = len(game.universe)
    check_variables(n, EXHAUSTIVE_VARIABLE_CAP)
    legal = bytearray(1 << n)
    is_legal_mask = game.is_legal_mask
    for mask in range(1 << n):
        legal[mask] = is_legal_mask(mask)
    if not legal[0]:
        return StrongCheck(False, None, game.monomial(0))
    for mask in range(1, 1 << n):
        if not legal[mask]:
            continue
        bad = [mask ^ (1 << i) for i in _bits(mask) if not legal[mask ^ (1 << i)]]
        if bad:
            sub = min((game.monomial(b) for b in bad), key=lambda m: sorted(m.vars))
            return StrongCheck(False, game.monomial(mask), sub)
    return StrongCheck(True)
