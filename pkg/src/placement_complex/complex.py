"""Simplicial complexes and the facet / Stanley-Reisner operators.

A complex is stored as its vertex tuple plus the antichain of its facets.  Two
degenerate complexes are kept apart on purpose: VOID has no faces at all (no
facets), EMPTY has exactly the empty face (facet set ``{frozenset()}``).  The
operators depend on the difference: the zero ideal is the facet ideal of VOID,
the unit ideal ``<1>`` is its Stanley-Reisner ideal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable

from .algebra import Monomial, MonomialIdeal, Universe, Variable, maximal_antichain
from .downsets import Downset, grow_downset
from .errors import DomainError, SizeLimitError
from .limits import MAX_VARIABLES, check_variables

ISO_VERTEX_LIMIT = 16


def _label_key(v):
    if isinstance(v, Variable):
        return (0, v.index, int(v.player), "")
    if isinstance(v, int):
        return (1, v, 0, "")
    return (2, 0, 0, str(v))


def _label_str(v) -> str:
    return str(v)


class SimplicialComplex:
    """A finite simplicial complex on an explicit vertex set.

    ``facets`` may be any family of vertex sets; it is reduced to its
    inclusion-maximal members.  Vertices not covered by a facet are allowed,
    they are simply non-faces.
    """

    def __init__(self, vertices: Iterable[Hashable] | None, facets: Iterable[Iterable[Hashable]]):
        fam = [frozenset(f) for f in facets]
        if vertices is None:
            seen = set().union(*fam) if fam else set()
            vertices = sorted(seen, key=_label_key)
        verts = tuple(dict.fromkeys(vertices))
        self.vertices: tuple = verts
        self._bit = {v: 1 << i for i, v in enumerate(verts)}
        masks = [self.mask(f) for f in fam]
        self._facet_masks = tuple(sorted(maximal_antichain(masks)))
        self.facets: frozenset[frozenset] = frozenset(self.labels(m) for m in self._facet_masks)

    @classmethod
    def void(cls, vertices: Iterable = ()) -> SimplicialComplex:
        return cls(vertices, [])

    @classmethod
    def empty(cls, vertices: Iterable = ()) -> SimplicialComplex:
        return cls(vertices, [()])

    @classmethod
    def simplex(cls, vertices: Iterable) -> SimplicialComplex:
        vs = tuple(vertices)
        return cls(vs, [vs])

    @classmethod
    def from_faces(cls, vertices, faces: Iterable[Iterable]) -> SimplicialComplex:
        return cls(vertices, faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.facets))

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(VOID)"
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.sorted_facets())
        return f"SimplicialComplex({body})"

    @property
    def is_void(self) -> bool:
        return not self._facet_masks

    @property
    def is_empty(self) -> bool:
        return self._facet_masks == (0,)

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._facet_masks

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def mask(self, s: Iterable) -> int:
        m = 0
        for v in s:
            try:
                m |= self._bit[v]
            except KeyError:
                raise DomainError(f"{v!r} is not a vertex of this complex") from None
        return m

    def labels(self, mask: int) -> frozenset:
        return frozenset(v for v in self.vertices if self._bit[v] & mask)

    def sorted_facets(self) -> list[list]:
        return sort_sets(self.facets)

    def contains_mask(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self._facet_masks)

    def is_face(self, s: Iterable) -> bool:
        return self.contains_mask(self.mask(s))

    @cached_property
    def _downset(self) -> Downset:
        check_variables(len(self.vertices), MAX_VARIABLES)
        return grow_downset(len(self.vertices), self.contains_mask)

    def faces(self) -> set[frozenset]:
        return {self.labels(m) for m in self._downset.members}

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by cardinality, starting with the empty face. VOID gives ``()``."""
        return tuple(self._downset.counts)

    def minimal_non_faces(self) -> frozenset[frozenset]:
        return frozenset(self.labels(m) for m in self._downset.minimal_outside)

    def one_skeleton(self) -> list[tuple]:
        edges = set()
        for f in self._facet_masks:
            for a, b in combinations(self.labels(f), 2):
                edges.add(tuple(sorted((a, b), key=_label_key)))
        return sorted(edges, key=lambda e: (_label_key(e[0]), _label_key(e[1])))

    def to_dict(self) -> dict:
        return {
            "vertices": [_label_str(v) for v in self.vertices],
            "facets": [[_label_str(v) for v in f] for f in self.sorted_facets()],
            "f_vector": list(self.f_vector()),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self, name: str = "complex") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}" [label="{v}"];')
        for a, b in self.one_skeleton():
            lines.append(f'  "{a}" -- "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def sort_sets(sets: Iterable[Iterable]) -> list[list]:
    """Canonical order for facets / generators: larger first, then by rendered text."""
    rows = [sorted(s, key=_label_key) for s in sets]

    def key(row):
        if all(isinstance(v, Variable) for v in row):
            text = str(Monomial(row))
        else:
            text = ",".join(map(str, row))
        return (-len(row), text)

    return sorted(rows, key=key)


def _parse_label(s):
    if isinstance(s, str):
        try:
            return Variable.parse(s)
        except ValueError:
            return int(s) if s.isdigit() else s
    return s


def complex_from_dict(d: dict) -> SimplicialComplex:
    """Inverse of :meth:`SimplicialComplex.to_dict` (the ``f_vector`` entry is checked, not trusted)."""
    verts = [_parse_label(v) for v in d["vertices"]]
    out = SimplicialComplex(verts, [[_parse_label(v) for v in f] for f in d["facets"]])
    if "f_vector" in d and list(out.f_vector()) != list(d["f_vector"]):
        raise DomainError("stored f_vector does not match the facets")
    return out


def is_face(delta: SimplicialComplex, s: Iterable) -> bool:
    return delta.is_face(s)


def f_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    return delta.f_vector()


def minimal_non_faces(delta: SimplicialComplex) -> frozenset[frozenset]:
    return delta.minimal_non_faces()


def _universe(delta: SimplicialComplex) -> Universe:
    for v in delta.vertices:
        if not isinstance(v, Variable):
            raise DomainError(f"vertex {v!r} is not a variable; ideals need x/y labels")
    return Universe(delta.vertices)


def facet_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    uni = _universe(delta)
    return MonomialIdeal(frozenset(Monomial(f) for f in delta.facets), uni)


def sr_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    uni = _universe(delta)
    return MonomialIdeal(frozenset(Monomial(s) for s in delta.minimal_non_faces()), uni)


def facet_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    return SimplicialComplex(ideal.universe.variables, [g.vars for g in ideal.generators])


def sr_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    uni = ideal.universe
    check_variables(len(uni), MAX_VARIABLES)
    down = grow_downset(len(uni), lambda m: not ideal.contains_mask(m))
    return SimplicialComplex(uni.variables, [uni.variables_of(m) for m in down.maximal()])


def _shift_label(v, k: int):
    if isinstance(v, Variable):
        return Variable(v.index + k, v.player)
    if isinstance(v, int):
        return v + k
    raise DomainError(f"cannot relabel vertex {v!r}")


def _max_index(vertices) -> int:
    out = 0
    for v in vertices:
        if isinstance(v, Variable):
            out = max(out, v.index)
        elif isinstance(v, int):
            out = max(out, v)
    return out


def join(a: SimplicialComplex, b: SimplicialComplex, shift: int | None = None) -> SimplicialComplex:
    """Join of ``a`` and ``b`` after shifting b's indices past a's largest one.

    The shift matches :func:`board.disjoint_union` for single-vertex games when
    ``a`` uses every index of its board.
    """
    k = _max_index(a.vertices) if shift is None else shift
    rb = {v: _shift_label(v, k) for v in b.vertices}
    verts = list(a.vertices) + [rb[v] for v in b.vertices]
    if len(set(verts)) != len(verts):
        raise DomainError("vertex sets still overlap after relabeling")
    facets = [fa | frozenset(rb[v] for v in fb) for fa in a.facets for fb in b.facets]
    return SimplicialComplex(verts, facets)


@dataclass(frozen=True)
class Isomorphism:
    found: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.found


def _vertex_profile(delta: SimplicialComplex) -> dict:
    prof = {}
    for v in delta.vertices:
        sizes = sorted(len(f) for f in delta.facets if v in f)
        prof[v] = (len(sizes), tuple(sizes))
    return prof


def _cooccurrence(delta: SimplicialComplex) -> dict:
    co: dict = {}
    for f in delta.facets:
        for u in f:
            for w in f:
                co[u, w] = co.get((u, w), 0) + 1
    return co


def are_isomorphic(a: SimplicialComplex, b: SimplicialComplex, limit: int = ISO_VERTEX_LIMIT) -> Isomorphism:
    """Search for a vertex bijection carrying the facets of ``a`` onto those of ``b``.

    Backtracking over vertices of ``a`` (rarest profile first), pruned by the
    per-vertex facet-size profile and by pairwise facet co-occurrence counts.
    """
    if len(a.vertices) > limit or len(b.vertices) > limit:
        raise SizeLimitError(f"isomorphism search is limited to {limit} vertices")
    no = Isomorphism(False)
    if len(a.vertices) != len(b.vertices) or len(a.facets) != len(b.facets):
        return no
    if sorted(map(len, a.facets)) != sorted(map(len, b.facets)):
        return no
    if a.f_vector() != b.f_vector():
        return no
    pa, pb = _vertex_profile(a), _vertex_profile(b)
    if sorted(pa.values()) != sorted(pb.values()):
        return no
    co_a, co_b = _cooccurrence(a), _cooccurrence(b)
    classes: dict = {}
    for w in b.vertices:
        classes.setdefault(pb[w], []).append(w)
    order = sorted(a.vertices, key=lambda v: (len(classes[pa[v]]), -pa[v][0], _label_key(v)))
    target = b.facets
    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(order):
            image = frozenset(frozenset(mapping[v] for v in f) for f in a.facets)
            return image == target
        v = order[i]
        cands = sorted(classes[pa[v]], key=lambda w: w != v)
        for w in cands:
            if w in used:
                continue
            if any(co_a.get((u, v), 0) != co_b.get((mapping[u], w), 0) for u in mapping):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if extend(0):
        return Isomorphism(True, dict(mapping))
    return no
