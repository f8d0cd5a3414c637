"""Level-by-level enumeration of a downward-closed family of bitmasks.

Used for faces of a complex, square-free monomials outside an ideal, and legal
positions of a game.  A candidate at level k is only tested when all of its
(k-1)-subsets are already known members, which is what makes the search prune
supersets of non-members.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import RulesetViolationError


def bits_of(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


@dataclass
class Downset:
    n: int
    levels: list[set[int]] = field(default_factory=list)
    minimal_outside: list[int] = field(default_factory=list)

    @property
    def members(self) -> set[int]:
        out: set[int] = set()
        for lvl in self.levels:
            out |= lvl
        return out

    @property
    def counts(self) -> list[int]:
        return [len(lvl) for lvl in self.levels]

    def maximal(self) -> list[int]:
        out = []
        for k, lvl in enumerate(self.levels):
            nxt = self.levels[k + 1] if k + 1 < len(self.levels) else set()
            for f in lvl:
                if not any((f | (1 << i)) in nxt for i in range(self.n) if not f >> i & 1):
                    out.append(f)
        return out


def grow_downset(n: int, member: Callable[[int], bool], strict: bool = False) -> Downset:
    """Enumerate the members of a downward-closed family over ``n`` bits.

    ``minimal_outside`` collects the non-members whose one-smaller subsets all
    belong.  With ``strict`` the predicate is also evaluated on pruned
    candidates, and one that turns out to be a member raises
    :class:`RulesetViolationError`: the family was not downward closed.
    """
    out = Downset(n)
    if not member(0):
        out.minimal_outside.append(0)
        return out
    prev = {0}
    while prev:
        out.levels.append(prev)
        cur: set[int] = set()
        seen: set[int] = set()
        for f in prev:
            for i in range(n):
                b = 1 << i
                if f & b:
                    continue
                c = f | b
                if c in seen:
                    continue
                seen.add(c)
                if all((c ^ s) in prev for s in bits_of(c)):
                    if member(c):
                        cur.add(c)
                    else:
                        out.minimal_outside.append(c)
                elif strict and member(c):
                    raise RulesetViolationError(c)
        prev = cur
    return out
