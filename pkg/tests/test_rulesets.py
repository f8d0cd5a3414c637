from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from placement_complex.algebra import Monomial, Player, monomial, x, y
from placement_complex.board import Board, make_cycle, make_grid, make_path
from placement_complex.errors import DomainError, MonomialParseError, SizeLimitError, UnsupportedBoardError
from placement_complex.rulesets import (
    BasicPosition,
    PredicateRuleset,
    basic_positions,
    check_strong_placement,
    get_ruleset,
    is_legal,
    parse_custom_ruleset,
)

M = monomial
GAMES = ["trivial", "snort", "col", "nogo"]


def test_basic_positions_snort_p3():
    bps = basic_positions(get_ruleset("snort"), make_path(3))
    assert [str(b) for b in bps] == ["x1", "x2", "x3", "y1", "y2", "y3"]
    assert all(b.cells == {b.index} for b in bps)


def test_basic_positions_col_p1():
    assert [str(b) for b in basic_positions(get_ruleset("col"), make_path(1))] == ["x1", "y1"]


def test_basic_positions_domineering_2x2():
    bps = basic_positions(get_ruleset("domineering"), make_grid(2, 2))
    left = [b.cells for b in bps if b.player is Player.LEFT]
    right = [b.cells for b in bps if b.player is Player.RIGHT]
    # vertical pairs (1,3),(2,4); horizontal pairs (1,2),(3,4)
    assert left == [{1, 3}, {2, 4}]
    assert right == [{1, 2}, {3, 4}]


def test_domineering_needs_grid():
    with pytest.raises(UnsupportedBoardError):
        basic_positions(get_ruleset("domineering"), make_path(4))


@pytest.mark.parametrize(
    "game,board,pos,expected",
    [
        ("col", make_path(3), "x1*y2*x3", True),
        ("col", make_path(3), "x1*x2", False),
        ("nogo", make_path(3), "x1*x2*x3", False),
        ("nogo", make_path(3), "x1*x2", True),
        ("nogo", make_path(3), "x1*y2", False),
        ("snort", make_path(3), "x1*y2", False),
        ("snort", make_path(3), "x1*y3", True),
        ("trivial", make_path(1), "x1*y1", False),
        ("col", make_cycle(3), "x2*y1*y3", False),
    ],
)
def test_is_legal_examples(game, board, pos, expected):
    assert is_legal(get_ruleset(game), board, M(pos)) is expected


@pytest.mark.parametrize("game", GAMES + ["domineering"])
def test_empty_position_legal(game):
    assert is_legal(get_ruleset(game), make_grid(2, 2), Monomial())


def test_foreign_positions_rejected():
    col = get_ruleset("col")
    with pytest.raises(DomainError):
        is_legal(col, make_path(3), M("x4"))
    with pytest.raises(DomainError):
        is_legal(col, make_path(3), [BasicPosition(Player.LEFT, frozenset({2}), 1)])
    bp = basic_positions(col, make_path(3))[0]
    assert is_legal(col, make_path(3), [bp])


ORACLE_BOARDS = [
    ("P1", 1, oracles.path_edges(1), make_path(1)),
    ("P3", 3, oracles.path_edges(3), make_path(3)),
    ("P4", 4, oracles.path_edges(4), make_path(4)),
    ("C4", 4, oracles.cycle_edges(4), make_cycle(4)),
    ("star", 4, {(1, 2), (1, 3), (1, 4)}, Board(4, frozenset({(1, 2), (1, 3), (1, 4)}))),
    ("K4", 4, set(combinations(range(1, 5), 2)), Board(4, frozenset(combinations(range(1, 5), 2)))),
]


@pytest.mark.parametrize("game", GAMES)
@pytest.mark.parametrize("name,n,edges,board", ORACLE_BOARDS, ids=[b[0] for b in ORACLE_BOARDS])
def test_legality_matches_oracle_on_every_subset(game, name, n, edges, board):
    legal, names = oracles.all_positions(game, n, edges)
    rs = get_ruleset(game)
    for k in range(len(names) + 1):
        for combo in combinations(names, k):
            got = is_legal(rs, board, Monomial(next(iter(M(c).vars)) for c in combo))
            assert got == (frozenset(combo) in legal), combo


@pytest.mark.parametrize("rows,cols", [(2, 2), (2, 3), (3, 2)])
def test_domineering_matches_oracle(rows, cols):
    legal, names = oracles.all_positions("domineering", rows * cols, oracles.grid_edges(rows, cols), (rows, cols))
    rs, board = get_ruleset("domineering"), make_grid(rows, cols)
    for k in range(len(names) + 1):
        for combo in combinations(names, k):
            pos = Monomial(next(iter(M(c).vars)) for c in combo)
            assert is_legal(rs, board, pos) == (frozenset(combo) in legal)


def test_strong_placement_col_nogo_p3():
    assert check_strong_placement(get_ruleset("col"), make_path(3))
    assert check_strong_placement(get_ruleset("nogo"), make_path(3))


def test_strong_placement_counterexample():
    contrived = PredicateRuleset("not-one", lambda board, pos: len(pos) != 1)
    res = check_strong_placement(contrived, make_path(2))
    assert not res
    assert res.legal_position == M("x1*x2")
    assert res.illegal_subposition == M("x1")
    assert res.illegal_subposition.divides(res.legal_position)


def test_strong_placement_size_limits():
    with pytest.raises(SizeLimitError):
        check_strong_placement(get_ruleset("col"), make_path(11))
    with pytest.raises(SizeLimitError):
        check_strong_placement(get_ruleset("col"), make_path(30))


def test_custom_ruleset_file():
    text = "vars: x1..x3 y1..y3\n# Col on P3\nx1*x2\nx2*x3\ny1*y2\ny2*y3\n"
    rs = parse_custom_ruleset(text)
    board = Board(3)
    assert [str(v) for v in rs.variables] == ["x1", "x2", "x3", "y1", "y2", "y3"]
    assert is_legal(rs, board, M("x1*x3*y1*y3"))
    assert not is_legal(rs, board, M("x2*x3"))
    with pytest.raises(MonomialParseError):
        parse_custom_ruleset("x1*x2\n")
    with pytest.raises(DomainError):
        parse_custom_ruleset("vars: x1 y1\nx2\n")


def _single_vertex_positions(n):
    vars_ = [x(i) for i in range(1, n + 1)] + [y(i) for i in range(1, n + 1)]
    return st.frozensets(st.sampled_from(vars_)).map(Monomial)


@st.composite
def board_and_position(draw):
    n = draw(st.integers(1, 6))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Board(n, frozenset(edges)), draw(_single_vertex_positions(n))


@settings(max_examples=150)
@given(board_and_position(), st.sampled_from(GAMES))
def test_player_swap_symmetry(bp, game):
    board, pos = bp
    rs = get_ruleset(game)
    assert is_legal(rs, board, pos) == is_legal(rs, board, pos.swapped())


@settings(max_examples=150)
@given(board_and_position(), st.sampled_from(GAMES), st.randoms())
def test_legality_hereditary(bp, game, rnd):
    board, pos = bp
    rs = get_ruleset(game)
    if is_legal(rs, board, pos):
        sub = Monomial(v for v in pos.vars if rnd.random() < 0.5)
        assert is_legal(rs, board, sub)


def test_domineering_grid_cache_does_not_leak_to_path():
    dom = get_ruleset("domineering")
    dom.compile(make_grid(1, 4))
    with pytest.raises(UnsupportedBoardError):
        dom.compile(make_path(4))
