"""Square-free monomials and square-free monomial ideals.

Ideals are never modelled over a ring.  A square-free monomial ideal is fully
determined by its minimal generators, and every operation needed here
(divisibility, membership, equality) reduces to subset tests on variable sets.
Internally monomials are turned into bitmasks over a declared, ordered
:class:`Universe`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DomainError, MonomialParseError
from .limits import check_variables


class Player(IntEnum):
    LEFT = 0
    RIGHT = 1

    @property
    def letter(self) -> str:
        return "x" if self is Player.LEFT else "y"

    @property
    def short(self) -> str:
        return "L" if self is Player.LEFT else "R"

    def opponent(self) -> Player:
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


@dataclass(frozen=True, order=True)
class Variable:
    """``x<index>`` for Left, ``y<index>`` for Right.

    Field order makes the natural sort the canonical one: by index, Left first.
    """

    index: int
    player: Player

    def __post_init__(self):
        if self.index < 1:
            raise DomainError(f"variable index must be positive, got {self.index}")

    def __str__(self) -> str:
        return f"{self.player.letter}{self.index}"

    def __repr__(self) -> str:
        return f"Variable({self})"

    def swapped(self) -> Variable:
        return Variable(self.index, self.player.opponent())

    @classmethod
    def parse(cls, token: str) -> Variable:
        m = _VAR_RE.fullmatch(token.strip())
        if not m:
            raise MonomialParseError(f"not a variable: {token!r}")
        player = Player.LEFT if m.group(1) == "x" else Player.RIGHT
        return cls(int(m.group(2)), player)


_VAR_RE = re.compile(r"([xy])(\d+)")


def x(i: int) -> Variable:
    return Variable(i, Player.LEFT)


def y(i: int) -> Variable:
    return Variable(i, Player.RIGHT)


@dataclass(frozen=True, init=False)
class Monomial:
    """A square-free monomial, i.e. a finite set of variables."""

    vars: frozenset[Variable] = frozenset()

    def __init__(self, vars: Iterable[Variable] = ()):
        object.__setattr__(self, "vars", frozenset(vars))

    def __str__(self) -> str:
        if not self.vars:
            return "1"
        return "*".join(str(v) for v in sorted(self.vars))

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def __len__(self) -> int:
        return len(self.vars)

    def __iter__(self) -> Iterator[Variable]:
        return iter(sorted(self.vars))

    def __contains__(self, v: object) -> bool:
        return v in self.vars

    def __mul__(self, other: Monomial) -> Monomial:
        # square-free product: exponents are capped at one
        return Monomial(self.vars | other.vars)

    @property
    def degree(self) -> int:
        return len(self.vars)

    def divides(self, other: Monomial) -> bool:
        return self.vars <= other.vars

    def swapped(self) -> Monomial:
        return Monomial(v.swapped() for v in self.vars)

    @classmethod
    def parse(cls, text: str) -> Monomial:
        text = text.strip()
        if text == "1":
            return cls()
        if not text:
            raise MonomialParseError("empty monomial text")
        tokens = text.split("*")
        out = [Variable.parse(t) for t in tokens]
        if len(set(out)) != len(out):
            raise MonomialParseError(f"repeated variable in {text!r}; monomials are square-free")
        return cls(out)


def monomial(text: str) -> Monomial:
    return Monomial.parse(text)


def divides(a: Monomial, b: Monomial) -> bool:
    return a.vars <= b.vars


def sort_key(m: Monomial) -> tuple[int, str]:
    """Canonical listing order: larger monomials first, then by rendered text."""
    return (-len(m), str(m))


def canonical_order(monomials: Iterable[Monomial]) -> list[Monomial]:
    return sorted(monomials, key=sort_key)


class Universe:
    """An ordered variable set; bit ``i`` of a mask stands for ``variables[i]``."""

    __slots__ = ("variables", "_bit")

    def __init__(self, variables: Iterable[Variable]):
        vs = tuple(variables)
        check_variables(len(vs))
        if len(set(vs)) != len(vs):
            raise DomainError("universe lists a variable twice")
        self.variables = vs
        self._bit = {v: 1 << i for i, v in enumerate(vs)}

    def __len__(self) -> int:
        return len(self.variables)

    def __iter__(self) -> Iterator[Variable]:
        return iter(self.variables)

    def __contains__(self, v: object) -> bool:
        return v in self._bit

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Universe) and set(self.variables) == set(other.variables)

    def __hash__(self) -> int:
        return hash(frozenset(self.variables))

    def __repr__(self) -> str:
        return f"Universe({' '.join(map(str, self.variables))})"

    @property
    def full_mask(self) -> int:
        return (1 << len(self.variables)) - 1

    def bit(self, v: Variable) -> int:
        try:
            return self._bit[v]
        except KeyError:
            raise DomainError(f"variable {v} is not in the universe") from None

    def mask(self, vs: Iterable[Variable]) -> int:
        m = 0
        for v in vs:
            m |= self.bit(v)
        return m

    def variables_of(self, mask: int) -> frozenset[Variable]:
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(self.variables[i])
            mask >>= 1
            i += 1
        return frozenset(out)

    def monomial(self, mask: int) -> Monomial:
        return Monomial(self.variables_of(mask))


def minimal_antichain(masks: Iterable[int]) -> list[int]:
    """Drop every mask that is a strict superset of another one (duplicates collapse)."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def maximal_antichain(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count, reverse=True):
        if not any(k & m == m for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True, eq=False)
class MonomialIdeal:
    """A square-free monomial ideal given by its minimal generators.

    The zero ideal has no generators; the unit ideal has the single generator 1.
    """

    generators: frozenset[Monomial]
    universe: Universe

    def __post_init__(self):
        masks = [self.universe.mask(g.vars) for g in self.generators]
        if len(minimal_antichain(masks)) != len(masks):
            raise DomainError("generators are not an antichain under divisibility")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.universe == other.universe and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.universe, self.generators))

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        return "<" + ", ".join(map(str, self.sorted_generators())) + ">"

    def __repr__(self) -> str:
        return f"MonomialIdeal({self})"

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(self.universe.mask(g.vars) for g in self.sorted_generators())

    def sorted_generators(self) -> list[Monomial]:
        return canonical_order(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, m: Monomial) -> bool:
        return ideal_contains(self, m)

    def contains_mask(self, mask: int) -> bool:
        return any(g & mask == g for g in self.masks)

    def render(self) -> str:
        """One generator per line (the ideal text format)."""
        return "".join(f"{g}\n" for g in self.sorted_generators())


def _universe_for(monomials: Iterable[Monomial], universe) -> Universe:
    if isinstance(universe, Universe):
        return universe
    if universe is not None:
        return Universe(universe)
    seen: set[Variable] = set()
    for m in monomials:
        seen |= m.vars
    return Universe(sorted(seen))


def minimal_generators(monomials: Iterable[Monomial], universe=None) -> MonomialIdeal:
    """Reduce a generating set to the antichain of its divisibility-minimal elements.

    ``universe`` defaults to the sorted union of the variables that occur.
    """
    monos = list(monomials)
    uni = _universe_for(monos, universe)
    masks = minimal_antichain(uni.mask(m.vars) for m in monos)
    return MonomialIdeal(frozenset(uni.monomial(m) for m in masks), uni)


def ideal_contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return ideal.contains_mask(ideal.universe.mask(m.vars))


def ideals_equal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    if a.universe != b.universe:
        raise DomainError("ideals are declared over different universes")
    return a.generators == b.generators


def parse_ideal(text: str, universe=None) -> MonomialIdeal:
    """Parse one generator per line; blank lines and ``#`` comments are ignored."""
    monos = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            monos.append(Monomial.parse(line))
    return minimal_generators(monos, universe)
