"""Ptolemy diagrams on a finite polygon with a distinguished base edge.

A diagram of *size* ``m`` lives on an ``(m+1)``-gon whose vertices are
labelled ``0..m`` clockwise; the edge ``(0, m)`` closing the cycle is the
distinguished base edge and is always present (it is never stored among the
diagonals).  Size 1 is the degenerate diagram: two vertices and the base
edge only.

Every such Ptolemy diagram decomposes uniquely into cells, read off from the
subdivision of the polygon by its non-crossed chords: triangles, cliques
(>= 4 vertices, all internal connectors drawn) and empty cells (>= 4
vertices, none drawn).  The cell counts are the statistics ``(k, l, m)``
that the refined torsion-pair counts are indexed by.

Two enumerators are provided.  :func:`enumerate_polygon` is the brute-force
oracle: it scans all subsets of diagonals and keeps the Ptolemy ones.
:func:`polygon_diagrams` generates the same sets recursively through the
cell-at-the-base grammar and is the one used for large sizes; agreement of
the two is part of the test suite.
"""

from __future__ import annotations

import enum
import functools
import itertools
import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .config import DEFAULT_CAPS, CapExceeded


class MixedFaceError(ValueError):
    """A face of the non-crossed subdivision has some but not all of its
    internal connectors; impossible for a Ptolemy diagram, so the input was
    not one."""


class CellKind(enum.Enum):
    TRIANGLE = "triangle"
    CLIQUE = "clique"
    EMPTY_CELL = "empty_cell"


@dataclass(frozen=True)
class Cell:
    """One face of the unique cell decomposition, with its polygon labels."""

    vertices: tuple[int, ...]
    kind: CellKind

    def __post_init__(self) -> None:
        if self.kind is CellKind.TRIANGLE:
            if len(self.vertices) != 3:
                raise ValueError(f"triangle with {len(self.vertices)} vertices")
        elif len(self.vertices) < 4:
            raise ValueError(f"{self.kind.value} needs >= 4 vertices, got {len(self.vertices)}")


@dataclass(frozen=True)
class CellStatistics:
    """Counts of (triangles, cliques, empty cells)."""

    triangles: int = 0
    cliques: int = 0
    empty_cells: int = 0

    def __add__(self, other: "CellStatistics") -> "CellStatistics":
        return CellStatistics(
            self.triangles + other.triangles,
            self.cliques + other.cliques,
            self.empty_cells + other.empty_cells,
        )

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.triangles, self.cliques, self.empty_cells)


_KIND_TO_FIELD = {
    CellKind.TRIANGLE: CellStatistics(1, 0, 0),
    CellKind.CLIQUE: CellStatistics(0, 1, 0),
    CellKind.EMPTY_CELL: CellStatistics(0, 0, 1),
}


@dataclass(frozen=True)
class PolygonDiagram:
    """Diagonal set of an ``(size+1)``-gon with base edge ``(0, size)``."""

    size: int
    diagonals: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"size must be >= 1, got {self.size}")
        canon = tuple(sorted(set(tuple(d) for d in self.diagonals)))
        for a, b in canon:
            if not (0 <= a < b <= self.size):
                raise ValueError(f"diagonal {(a, b)!r} out of range for size {self.size}")
            if b - a < 2:
                raise ValueError(f"diagonal {(a, b)!r} has length < 2")
            if (a, b) == (0, self.size):
                raise ValueError("the base edge is implicit and never stored as a diagonal")
        object.__setattr__(self, "diagonals", canon)

    @property
    def is_degenerate(self) -> bool:
        return self.size == 1

    def to_json(self) -> str:
        return json.dumps(
            {"size": self.size, "diagonals": [list(d) for d in self.diagonals]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "PolygonDiagram":
        data = json.loads(text)
        return cls(data["size"], tuple(tuple(d) for d in data["diagonals"]))


DEGENERATE = PolygonDiagram(1)


def diagonal_pairs(m: int) -> list[tuple[int, int]]:
    """All candidate diagonals of the (m+1)-gon, base edge excluded."""
    return [
        (a, b)
        for a in range(m + 1)
        for b in range(a + 2, m + 1)
        if (a, b) != (0, m)
    ]


def _chords_cross(c: tuple[int, int], d: tuple[int, int]) -> bool:
    return c[0] < d[0] < c[1] < d[1] or d[0] < c[0] < d[1] < c[1]


def is_ptolemy_polygon(diagram: PolygonDiagram) -> bool:
    """Every crossing pair of diagonals forces its four connectors.

    Connectors of length 1 are polygon sides and the pair ``(0, size)`` is
    the base edge; both count as present.
    """
    m = diagram.size
    ds = diagram.diagonals
    have = set(ds)
    for c, d in itertools.combinations(ds, 2):
        if not _chords_cross(c, d):
            continue
        if d[0] < c[0]:
            c, d = d, c
        (i, j), (r, s) = c, d
        for p in ((i, r), (i, s), (r, j), (j, s)):
            if p[1] - p[0] >= 2 and p != (0, m) and p not in have:
                return False
    return True


def enumerate_polygon(m: int, cap: int = DEFAULT_CAPS.polygon_brute) -> list[PolygonDiagram]:
    """Brute-force oracle: scan all diagonal subsets, keep the Ptolemy ones.

    The scan is a vectorized bitmask sweep; each crossing pair of diagonals
    contributes one constraint "if both bits are set, the connector bits must
    be set too" (or an outright exclusion when a pair can never be completed,
    which does not happen on the polygon).  Counts for m = 1..5 are
    1, 1, 4, 17, 82.
    """
    if m < 1:
        raise ValueError(f"size must be >= 1, got {m}")
    if m > cap:
        raise CapExceeded(f"polygon brute force capped at size {cap}, got {m}")
    diags = diagonal_pairs(m)
    k = len(diags)
    if k == 0:
        return [PolygonDiagram(m)]
    index = {d: t for t, d in enumerate(diags)}
    constraints: list[tuple[int, int, int]] = []
    for p, q in itertools.combinations(range(k), 2):
        c, d = diags[p], diags[q]
        if not _chords_cross(c, d):
            continue
        if d[0] < c[0]:
            c, d = d, c
        (i, j), (r, s) = c, d
        req = 0
        for pair in ((i, r), (i, s), (r, j), (j, s)):
            if pair[1] - pair[0] >= 2 and pair != (0, m):
                req |= 1 << index[pair]
        constraints.append((p, q, req))

    good: list[int] = []
    total = 1 << k
    chunk = 1 << 22
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        valid = np.ones(masks.shape, dtype=bool)
        for p, q, req in constraints:
            both = ((masks >> np.uint64(p)) & (masks >> np.uint64(q)) & np.uint64(1)).astype(bool)
            ok = (masks & np.uint64(req)) == np.uint64(req)
            np.logical_and(valid, ~both | ok, out=valid)
        good.extend(int(v) for v in masks[valid])

    out = []
    for mask in good:
        chosen = tuple(diags[t] for t in range(k) if mask >> t & 1)
        out.append(PolygonDiagram(m, chosen))
    out.sort(key=lambda P: P.diagonals)
    return out


@functools.cache
def polygon_diagrams(m: int) -> tuple[PolygonDiagram, ...]:
    """All Ptolemy diagrams of size m, generated through the base-cell grammar.

    A non-degenerate diagram is a cell sitting on the base edge -- a triangle,
    a clique or an empty cell -- with smaller diagrams glued along their own
    base edges onto the cell's other edges.  The glued edge of a size->=2
    sub-diagram is itself a diagonal of the result.
    """
    if m < 1:
        raise ValueError(f"size must be >= 1, got {m}")
    if m == 1:
        return (DEGENERATE,)
    out: list[PolygonDiagram] = []
    for t in range(1, m):
        for inner in itertools.combinations(range(1, m), t):
            corners = (0,) + inner + (m,)
            s = t + 1  # corner indices run 0..s; the cell has s+1 vertices
            if t == 1:
                kinds: tuple[CellKind, ...] = (CellKind.TRIANGLE,)
            else:
                kinds = (CellKind.CLIQUE, CellKind.EMPTY_CELL)
            gaps = [corners[i + 1] - corners[i] for i in range(s)]
            sub_choices = [polygon_diagrams(g) for g in gaps]
            for kind in kinds:
                cell_diags: list[tuple[int, int]] = []
                if kind is CellKind.CLIQUE:
                    for a in range(s + 1):
                        for b in range(a + 2, s + 1):
                            if (a, b) != (0, s):
                                cell_diags.append((corners[a], corners[b]))
                for combo in itertools.product(*sub_choices):
                    diags = list(cell_diags)
                    for i, sub in enumerate(combo):
                        c = corners[i]
                        if sub.size >= 2:
                            diags.append((c, corners[i + 1]))
                            diags.extend((c + a, c + b) for a, b in sub.diagonals)
                    out.append(PolygonDiagram(m, tuple(diags)))
    out.sort(key=lambda P: P.diagonals)
    return tuple(out)


def _noncrossed_edges(diagram: PolygonDiagram) -> set[tuple[int, int]]:
    """Polygon sides plus the diagonals crossed by no other diagonal."""
    ds = diagram.diagonals
    crossed = set()
    for c, d in itertools.combinations(ds, 2):
        if _chords_cross(c, d):
            crossed.add(c)
            crossed.add(d)
    edges = {(a, a + 1) for a in range(diagram.size)}
    edges.update(d for d in ds if d not in crossed)
    return edges


def _face_above(edges: set[tuple[int, int]], a: int, b: int) -> tuple[int, ...]:
    """Corners of the face directly inside chord (a, b), in increasing order."""
    corners = [a]
    u = a
    while u != b:
        w = max(v for v in range(u + 1, b + 1) if (u, v) in edges and (u, v) != (a, b))
        corners.append(w)
        u = w
    return tuple(corners)


def _classify(diagram: PolygonDiagram, corners: tuple[int, ...]) -> Cell:
    t = len(corners) - 1
    if t == 2:
        return Cell(corners, CellKind.TRIANGLE)
    have = set(diagram.diagonals)
    internal = [
        (corners[x], corners[y])
        for x in range(t + 1)
        for y in range(x + 2, t + 1)
        if not (x == 0 and y == t)
    ]
    present = sum(1 for p in internal if p in have)
    if present == len(internal):
        return Cell(corners, CellKind.CLIQUE)
    if present == 0:
        return Cell(corners, CellKind.EMPTY_CELL)
    raise MixedFaceError(
        f"face {corners} has {present}/{len(internal)} internal connectors; input is not Ptolemy"
    )


def cells(diagram: PolygonDiagram) -> list[Cell]:
    """The unique cell decomposition, as faces of the non-crossed subdivision.

    The degenerate diagram has no cells.  Raises :class:`MixedFaceError` on
    non-Ptolemy input.
    """
    if diagram.size == 1:
        return []
    edges = _noncrossed_edges(diagram)
    out: list[Cell] = []
    stack: list[tuple[int, int]] = [(0, diagram.size)]
    while stack:
        a, b = stack.pop()
        corners = _face_above(edges, a, b)
        out.append(_classify(diagram, corners))
        for x, y in zip(corners, corners[1:]):
            if y - x >= 2:
                stack.append((x, y))
    out.sort(key=lambda c: c.vertices)
    return out


def statistics_polygon(diagram: PolygonDiagram) -> CellStatistics:
    """Tally the cell decomposition by kind."""
    stats = CellStatistics()
    for cell in cells(diagram):
        stats = stats + _KIND_TO_FIELD[cell.kind]
    return stats


def decompose_base(diagram: PolygonDiagram) -> tuple[Cell | None, list[PolygonDiagram]]:
    """Split off the cell adjacent to the base edge.

    Returns the base cell (None for the degenerate diagram) together with the
    sub-diagrams glued to its non-base edges, each re-rooted so that its own
    base edge is the glued edge.  :func:`compose_base` reassembles exactly.
    """
    if diagram.size == 1:
        return None, []
    edges = _noncrossed_edges(diagram)
    corners = _face_above(edges, 0, diagram.size)
    cell = _classify(diagram, corners)
    subs = []
    for c, d in zip(corners, corners[1:]):
        inner = tuple(
            (a - c, b - c)
            for a, b in diagram.diagonals
            if c <= a and b <= d and (a, b) != (c, d)
        )
        subs.append(PolygonDiagram(d - c, inner))
    return cell, subs


def compose_base(cell: Cell | None, subs: Sequence[PolygonDiagram]) -> PolygonDiagram:
    """Inverse of :func:`decompose_base`."""
    if cell is None:
        if subs:
            raise ValueError("degenerate diagram has no glued pieces")
        return DEGENERATE
    corners = cell.vertices
    if len(subs) != len(corners) - 1:
        raise ValueError(f"cell with {len(corners)} corners needs {len(corners) - 1} pieces")
    m = corners[-1]
    diags: list[tuple[int, int]] = []
    t = len(corners) - 1
    if cell.kind is CellKind.CLIQUE:
        for x in range(t + 1):
            for y in range(x + 2, t + 1):
                if (x, y) != (0, t):
                    diags.append((corners[x], corners[y]))
    for i, sub in enumerate(subs):
        c, d = corners[i], corners[i + 1]
        if sub.size != d - c:
            raise ValueError(f"piece of size {sub.size} glued on an edge of span {d - c}")
        if sub.size >= 2:
            diags.append((c, d))
            diags.extend((c + a, c + b) for a, b in sub.diagonals)
    return PolygonDiagram(m, tuple(diags))


def statistics_recursive(diagram: PolygonDiagram) -> CellStatistics:
    """Statistics through the grammar recursion; equals :func:`statistics_polygon`."""
    cell, subs = decompose_base(diagram)
    stats = CellStatistics() if cell is None else _KIND_TO_FIELD[cell.kind]
    for sub in subs:
        stats = stats + statistics_recursive(sub)
    return stats
