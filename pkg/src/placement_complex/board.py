"""Game boards as undirected simple graphs on vertices ``1..n``."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable

from .errors import BoardParseError, InvalidSizeError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Board:
    """Immutable board.  Edges are stored as sorted pairs ``(u, v)`` with ``u < v``."""

    vertex_count: int
    edges: frozenset[Edge] = frozenset()
    grid_shape: tuple[int, int] | None = None

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidSizeError(f"a board needs at least one vertex, got {self.vertex_count}")
        normed = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            for w in (u, v):
                if not 1 <= w <= self.vertex_count:
                    raise ValueError(f"edge endpoint {w} outside 1..{self.vertex_count}")
            normed.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normed))
        if self.grid_shape is not None:
            r, c = self.grid_shape
            if r * c != self.vertex_count or self.edges != _grid_edges(r, c):
                raise ValueError(f"edge set is not the {r}x{c} grid")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Board:
        edges = list(edges)
        seen = set()
        for u, v in edges:
            e = _norm(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {u} {v}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """``neighbor_masks[i]`` is the adjacency bitmask of vertex ``i + 1`` (bit j = vertex j + 1)."""
        out = []
        for v in self.vertices:
            m = 0
            for w in self.neighbors[v]:
                m |= 1 << (w - 1)
            out.append(m)
        return tuple(out)

    @cached_property
    def fingerprint(self) -> str:
        h = hashlib.sha256(str(self.vertex_count).encode())
        for u, v in self.sorted_edges():
            h.update(f";{u},{v}".encode())
        if self.grid_shape is not None:
            h.update(f";grid {self.grid_shape[0]}x{self.grid_shape[1]}".encode())
        return h.hexdigest()[:16]

    def render(self) -> str:
        lines = [str(self.vertex_count)]
        lines += [f"{u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    def cell(self, row: int, col: int) -> int:
        if self.grid_shape is None:
            raise ValueError("board was not built as a grid")
        return (row - 1) * self.grid_shape[1] + col

    def to_dict(self) -> dict:
        d = {"vertex_count": self.vertex_count, "edges": [list(e) for e in self.sorted_edges()]}
        if self.grid_shape is not None:
            d["grid_shape"] = list(self.grid_shape)
        return d


def make_path(n: int) -> Board:
    if n < 1:
        raise InvalidSizeError(f"path needs n >= 1, got {n}")
    return Board(n, frozenset((i, i + 1) for i in range(1, n)))


def make_cycle(n: int) -> Board:
    if n < 3:
        raise InvalidSizeError(f"cycle needs n >= 3, got {n}")
    return Board(n, make_path(n).edges | {(1, n)})


def _grid_edges(rows: int, cols: int) -> frozenset[Edge]:
    edges = set()
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c + 1
            if c + 1 < cols:
                edges.add((v, v + 1))
            if r + 1 < rows:
                edges.add((v, v + cols))
    return frozenset(edges)


def make_grid(rows: int, cols: int) -> Board:
    if rows < 1 or cols < 1:
        raise InvalidSizeError(f"grid dimensions must be positive, got {rows}x{cols}")
    return Board(rows * cols, _grid_edges(rows, cols), grid_shape=(rows, cols))


def disjoint_union(a: Board, b: Board) -> Board:
    k = a.vertex_count
    shifted = {(u + k, v + k) for u, v in b.edges}
    return Board(a.vertex_count + b.vertex_count, a.edges | shifted)


def parse_board(text: str) -> Board:
    """Parse the board text format.

    First meaningful line: vertex count.  Every further non-empty line is an
    edge ``u v``.  Lines starting with ``#`` are comments.
    """
    n = None
    edges: set[Edge] = set()
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise BoardParseError(no, raw, "expected the vertex count")
            n = int(parts[0])
            if n < 1:
                raise BoardParseError(no, raw, "vertex count must be positive")
            continue
        if len(parts) != 2:
            raise BoardParseError(no, raw, "expected two vertex numbers")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise BoardParseError(no, raw, "vertex numbers must be integers") from None
        if u == v:
            raise BoardParseError(no, raw, "self-loop")
        for w in (u, v):
            if not 1 <= w <= n:
                raise BoardParseError(no, raw, f"endpoint {w} outside 1..{n}")
        e = _norm(u, v)
        if e in edges:
            raise BoardParseError(no, raw, "duplicate edge")
        edges.add(e)
    if n is None:
        raise BoardParseError(0, "", "missing vertex count")
    return Board(n, frozenset(edges))


def render_board(board: Board) -> str:
    return board.render()


def resolve_board(desc: str) -> Board:
    """Resolve ``path:N``, ``cycle:N``, ``grid:RxC`` or a path to a board file."""
    kind, sep, arg = desc.partition(":")
    if sep and kind in ("path", "cycle", "grid"):
        try:
            if kind == "grid":
                r, c = arg.lower().split("x")
                return make_grid(int(r), int(c))
            n = int(arg)
        except ValueError:
            raise ValueError(f"bad board description {desc!r}") from None
        return make_path(n) if kind == "path" else make_cycle(n)
    return parse_board(Path(desc).read_text())
