"""Placement games on graphs as simplicial complexes and square-free monomial ideals."""

from .algebra import (
    Monomial,
    MonomialIdeal,
    Player,
    Universe,
    Variable,
    divides,
    ideal_contains,
    ideals_equal,
    minimal_generators,
    monomial,
    parse_ideal,
    x,
    y,
)
from .board import Board, resolve_board, disjoint_union, make_cycle, make_grid, make_path, parse_board, render_board
from .complex import (
    SimplicialComplex,
    are_isomorphic,
    f_vector,
    facet_complex,
    facet_ideal,
    is_face,
    join,
    minimal_non_faces,
    sr_complex,
    sr_ideal,
)
from .play import (
    BoardArena,
    IllegalComplexArena,
    LegalComplexArena,
    MatchState,
    apply_move,
    check_equivalence,
    legal_moves,
    new_match,
    random_playouts,
    replay,
)
from .rulesets import (
    BasicPosition,
    Ruleset,
    basic_positions,
    check_strong_placement,
    get_ruleset,
    is_legal,
)
from .transform import (
    DualityReport,
    GamePolynomial,
    game_polynomial,
    illegal_complex,
    illegal_ideal,
    legal_complex,
    legal_ideal,
    legal_positions,
    verify_duality,
)

__version__ = "0.1.0"
