"""From a placement game on a board to its legal complex, illegal complex and ideals.

All objects are derived from one pruned enumeration of the legal positions,
cached per (ruleset, board fingerprint).  Minimal illegal positions come out
of that enumeration directly; the illegal complex cross-checks them against
the minimal non-faces of the legal complex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

from .algebra import Monomial, MonomialIdeal, canonical_order, minimal_generators
from .board import Board
from .complex import SimplicialComplex, facet_ideal, sr_ideal
from .downsets import Downset, grow_downset
from .errors import ConsistencyError, RulesetViolationError
from .limits import check_variables, check_vertices
from .rulesets import PlacementGame, Ruleset


@dataclass(frozen=True)
class GamePolynomial:
    """``coefficients[i]`` is the number of legal positions with ``i`` pieces."""

    coefficients: tuple[int, ...]

    def __call__(self, x):
        total = 0
        for c in reversed(self.coefficients):
            total = total * x + c
        return total

    def __mul__(self, other: GamePolynomial) -> GamePolynomial:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return GamePolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, p in enumerate(a):
            for j, q in enumerate(b):
                out[i + j] += p * q
        return GamePolynomial(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                terms.append(f"{coef}x" if i == 1 else f"{coef}x^{i}")
        return " + ".join(terms) if terms else "0"


class GameAnalysis:
    """Enumeration results for one game on one board."""

    def __init__(self, game: PlacementGame, downset: Downset):
        self.game = game
        self.downset = downset

    @property
    def universe(self):
        return self.game.universe

    @cached_property
    def legal_masks(self) -> frozenset[int]:
        return frozenset(self.downset.members)

    @cached_property
    def maximal_masks(self) -> list[int]:
        return sorted(self.downset.maximal())

    @property
    def minimal_illegal_masks(self) -> list[int]:
        return sorted(self.downset.minimal_outside)

    def monomials(self, masks) -> list[Monomial]:
        return canonical_order(self.universe.monomial(m) for m in masks)


_CACHE: dict[tuple, GameAnalysis] = {}


def clear_cache() -> None:
    _CACHE.clear()


def analyze(ruleset: Ruleset, board: Board, cap: int | None = None) -> GameAnalysis:
    check_vertices(board.vertex_count, cap)
    key = (ruleset.cache_key, board.fingerprint)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    game = ruleset.compile(board)
    check_variables(len(game.universe))
    try:
        down = grow_downset(len(game.universe), game.is_legal_mask, strict=True)
    except RulesetViolationError as exc:
        bad = game.monomial(exc.args[0])
        raise RulesetViolationError(
            f"{ruleset.name}: position {bad} is legal but has an illegal subposition; "
            "the ruleset is not a strong placement game"
        ) from None
    if not down.levels:
        raise RulesetViolationError(f"{ruleset.name}: the empty position is illegal")
    result = GameAnalysis(game, down)
    _CACHE[key] = result
    return result


def legal_positions(ruleset: Ruleset, board: Board, cap: int | None = None) -> frozenset[Monomial]:
    a = analyze(ruleset, board, cap)
    return frozenset(a.universe.monomial(m) for m in a.legal_masks)


def legal_complex(ruleset: Ruleset, board: Board, cap: int | None = None) -> SimplicialComplex:
    a = analyze(ruleset, board, cap)
    uni = a.universe
    return SimplicialComplex(uni.variables, [uni.variables_of(m) for m in a.maximal_masks])


def _direct_illegal_complex(a: GameAnalysis) -> SimplicialComplex:
    uni = a.universe
    return SimplicialComplex(uni.variables, [uni.variables_of(m) for m in a.minimal_illegal_masks])


def illegal_complex(ruleset: Ruleset, board: Board, cap: int | None = None) -> SimplicialComplex:
    """Facets are the minimal illegal positions, found directly and checked against
    the minimal non-faces of the legal complex."""
    a = analyze(ruleset, board, cap)
    direct = _direct_illegal_complex(a)
    via_delta = legal_complex(ruleset, board, cap).minimal_non_faces()
    if direct.facets != via_delta:
        missing = sorted(str(Monomial(s)) for s in via_delta - direct.facets)
        extra = sorted(str(Monomial(s)) for s in direct.facets - via_delta)
        raise ConsistencyError(
            f"minimal illegal positions disagree with minimal non-faces "
            f"(only non-faces: {missing}, only direct: {extra})"
        )
    return direct


def legal_ideal(ruleset: Ruleset, board: Board, cap: int | None = None) -> MonomialIdeal:
    a = analyze(ruleset, board, cap)
    return minimal_generators(a.monomials(a.maximal_masks), a.universe)


def illegal_ideal(ruleset: Ruleset, board: Board, cap: int | None = None) -> MonomialIdeal:
    a = analyze(ruleset, board, cap)
    return minimal_generators(a.monomials(a.minimal_illegal_masks), a.universe)


def game_polynomial(ruleset: Ruleset, board: Board, cap: int | None = None) -> GamePolynomial:
    return GamePolynomial(tuple(analyze(ruleset, board, cap).downset.counts))


@dataclass
class DualityReport:
    legal_ideal_matches_facet_ideal: bool
    illegal_ideal_matches_gamma_facet_ideal: bool
    illegal_ideal_matches_sr_ideal: bool
    # clause name -> {"only_left": [...], "only_right": [...]}
    mismatches: dict[str, dict[str, list[str]]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            self.legal_ideal_matches_facet_ideal
            and self.illegal_ideal_matches_gamma_facet_ideal
            and self.illegal_ideal_matches_sr_ideal
        )

    def summary(self) -> str:
        flags = (
            self.legal_ideal_matches_facet_ideal,
            self.illegal_ideal_matches_gamma_facet_ideal,
            self.illegal_ideal_matches_sr_ideal,
        )
        return "duality: " + " ".join("OK" if f else "FAIL" for f in flags)

    def to_dict(self) -> dict:
        return {
            "legal_ideal_matches_facet_ideal": self.legal_ideal_matches_facet_ideal,
            "illegal_ideal_matches_gamma_facet_ideal": self.illegal_ideal_matches_gamma_facet_ideal,
            "illegal_ideal_matches_sr_ideal": self.illegal_ideal_matches_sr_ideal,
            "mismatches": self.mismatches,
        }


def _compare(a: MonomialIdeal, b: MonomialIdeal) -> dict[str, list[str]] | None:
    if a == b:
        return None
    return {
        "only_left": [str(m) for m in canonical_order(a.generators - b.generators)],
        "only_right": [str(m) for m in canonical_order(b.generators - a.generators)],
    }


def verify_duality(ruleset: Ruleset, board: Board, cap: int | None = None) -> DualityReport:
    """Evaluate I_legal = F(Delta), I_illegal = F(Gamma) and I_illegal = N(Delta) separately.

    Mismatches are reported, never raised.
    """
    a = analyze(ruleset, board, cap)
    delta = legal_complex(ruleset, board, cap)
    gamma = _direct_illegal_complex(a)
    i_legal = legal_ideal(ruleset, board, cap)
    i_illegal = illegal_ideal(ruleset, board, cap)
    checks = {
        "legal_ideal_vs_facet_ideal": _compare(i_legal, facet_ideal(delta)),
        "illegal_ideal_vs_gamma_facet_ideal": _compare(i_illegal, facet_ideal(gamma)),
        "illegal_ideal_vs_sr_ideal": _compare(i_illegal, sr_ideal(delta)),
    }
    return DualityReport(
        checks["legal_ideal_vs_facet_ideal"] is None,
        checks["illegal_ideal_vs_gamma_facet_ideal"] is None,
        checks["illegal_ideal_vs_sr_ideal"] is None,
        {k: v for k, v in checks.items() if v is not None},
    )


def export_bundle(ruleset: Ruleset, board: Board, cap: int | None = None) -> dict:
    delta = legal_complex(ruleset, board, cap)
    gamma = illegal_complex(ruleset, board, cap)
    return {
        "game": ruleset.name,
        "board": board.to_dict(),
        "variables": [str(v) for v in analyze(ruleset, board, cap).universe],
        "legal_complex_facets": [[str(v) for v in f] for f in delta.sorted_facets()],
        "illegal_complex_facets": [[str(v) for v in f] for f in gamma.sorted_facets()],
        "legal_ideal": [str(m) for m in legal_ideal(ruleset, board, cap).sorted_generators()],
        "illegal_ideal": [str(m) for m in illegal_ideal(ruleset, board, cap).sorted_generators()],
        "game_polynomial": list(game_polynomial(ruleset, board, cap).coefficients),
        "duality_report": verify_duality(ruleset, board, cap).to_dict(),
    }


def export_json(ruleset: Ruleset, board: Board, cap: int | None = None) -> str:
    return json.dumps(export_bundle(ruleset, board, cap), indent=2)
