"""Torsion pairs in the rank-n cluster tube.

A torsion pair is determined by its finite half: an n-periodic Ptolemy
diagram all of whose arcs have length at most n (exactly one side of any
torsion pair has finitely many indecomposables, so a half plus a side flag
is lossless).  The infinite half is only ever touched through the
perpendicular membership oracle :func:`perp_contains`.

The structure theory implemented here:

* *Wing decomposition*.  The vertices of ``Z/n`` not strictly overarched by
  any arc of the half are its *cuts*; consecutive cuts at distance g >= 2
  enclose a span whose top arc is forced to be present, and the arcs inside
  the span form a polygon Ptolemy diagram of size g on that top arc as base
  edge.  Distance-1 spans carry the degenerate diagram.  ``decompose`` /
  ``compose`` are mutually inverse.
* *Pointed cycles*.  Reading the spans cyclically and remembering which
  vertex is 0 turns a half into a cycle of polygon diagrams with one marked
  non-base vertex; ``to_pointed_cycle`` / ``from_pointed_cycle`` realize the
  bijection with cycles-of-diagrams pointed at a label.
* *Enumeration*.  ``enumerate_brute`` scans all orbit subsets for the
  Ptolemy property (the oracle), ``iter_structured`` runs the cut/wing
  grammar (the fast path); both must produce the same sets.
* *Symmetry*.  The translation ``tau`` acts on halves; a half is fixed by
  ``tau^d`` (d | n) iff it is d-periodic, i.e. iff it is a rank-d half in
  disguise, which is what makes the orbit counts and the sieving identities
  come out.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .arcs import (
    Arc,
    PeriodicDiagram,
    cross,
    is_ptolemy,
    nc_contains,
    nc_enumerate,
    normalize_orbit,
    shift_window,
)
from .config import DEFAULT_CAPS, CapExceeded
from .counting import torsion_count, torsion_count_refined, refined_support
from .polygons import (
    DEGENERATE,
    CellStatistics,
    PolygonDiagram,
    polygon_diagrams,
    statistics_polygon,
)


def is_finite_half(diagram: PeriodicDiagram) -> bool:
    """Can this diagram be the finite half of a torsion pair?

    Yes iff it is Ptolemy and every arc has length at most the rank.
    """
    return diagram.max_length() <= diagram.rank and is_ptolemy(diagram)


def perp_contains(diagram: PeriodicDiagram, arc: tuple[int, int]) -> bool:
    """Membership oracle for the perpendicular of the subcategory of X.

    The perpendicular corresponds to the arcs whose down-shift by one crosses
    nothing in X, i.e. ``a`` is perpendicular iff ``(a0+1, a1+1)`` is in
    ``nc X``.
    """
    return nc_contains(diagram, (arc[0] + 1, arc[1] + 1))


def perp_enumerate(diagram: PeriodicDiagram, max_length: int) -> PeriodicDiagram:
    """All orbits of the perpendicular up to the given length."""
    return nc_enumerate(diagram, max_length).tau(1)


@dataclass(frozen=True)
class TorsionPair:
    """A torsion pair, stored as its finite half plus which side is finite."""

    rank: int
    finite_half: PeriodicDiagram
    finite_side: str  # "left" (X finite) or "right" (the perp finite)

    def __post_init__(self) -> None:
        if self.finite_side not in ("left", "right"):
            raise ValueError(f"finite_side must be 'left' or 'right', got {self.finite_side!r}")
        if self.finite_half.rank != self.rank:
            raise ValueError("rank of the half disagrees with the pair rank")
        if self.finite_half.max_length() > self.rank:
            raise ValueError("a finite half has arcs of length at most the rank")

    def tau(self, power: int = 1) -> "TorsionPair":
        return TorsionPair(self.rank, self.finite_half.tau(power), self.finite_side)

    def to_json(self) -> str:
        return json.dumps(
            {
                "rank": self.rank,
                "finite_side": self.finite_side,
                "orbits": [list(a) for a in self.finite_half.sorted_orbits()],
            },
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "TorsionPair":
        data = json.loads(text)
        half = PeriodicDiagram.from_arcs(data["rank"], (tuple(a) for a in data["orbits"]))
        return cls(data["rank"], half, data["finite_side"])


# ---------------------------------------------------------------------------
# wing decomposition


@dataclass(frozen=True)
class WingDecomposition:
    """Cut vertices of a finite half together with the polygon diagram carried
    by each span between consecutive cuts (degenerate for unit spans)."""

    rank: int
    cuts: tuple[int, ...]
    pieces: tuple[PolygonDiagram, ...]

    def __post_init__(self) -> None:
        n = self.rank
        cuts = self.cuts
        if not cuts:
            raise ValueError("at least one cut is required")
        if list(cuts) != sorted(set(cuts)) or cuts[0] < 0 or cuts[-1] >= n:
            raise ValueError(f"cuts must be strictly increasing within [0, {n})")
        if len(self.pieces) != len(cuts):
            raise ValueError("one piece per cut is required")
        for (c, d), piece in zip(self.spans(), self.pieces):
            if piece.size != d - c:
                raise ValueError(f"piece of size {piece.size} on a span of width {d - c}")

    def spans(self) -> list[tuple[int, int]]:
        """Absolute spans (c, d) between consecutive cuts; the last wraps to
        ``cuts[0] + rank``."""
        ends = self.cuts[1:] + (self.cuts[0] + self.rank,)
        return list(zip(self.cuts, ends))

    def to_json(self) -> str:
        pairs = []
        for (c, d), piece in zip(self.spans(), self.pieces):
            arcs = []
            if piece.size >= 2:
                arcs = sorted([(c + a, c + b) for a, b in piece.diagonals] + [(c, d)])
            pairs.append({"top": [c, d], "arcs": [list(a) for a in arcs]})
        return json.dumps({"rank": self.rank, "pairs": pairs}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "WingDecomposition":
        data = json.loads(text)
        n = data["rank"]
        cuts, pieces = [], []
        for pair in data["pairs"]:
            c, d = pair["top"]
            cuts.append(c % n)
            diags = tuple(
                (a - c, b - c) for a, b in map(tuple, pair["arcs"]) if (a, b) != (c, d)
            )
            pieces.append(PolygonDiagram(d - c, diags))
        order = sorted(range(len(cuts)), key=lambda t: cuts[t])
        return cls(n, tuple(cuts[t] for t in order), tuple(pieces[t] for t in order))


def decompose(diagram: PeriodicDiagram) -> WingDecomposition:
    """Split a finite half into its cuts and per-span polygon diagrams.

    Cuts are the vertices of ``[0, n)`` not strictly overarched by any arc.
    Raises if a multi-vertex span is missing its top arc or if some arc
    straddles a cut; both mean the input was not a finite half.
    """
    n = diagram.rank
    covered = set()
    for i, j in diagram.orbits:
        for v in range(i + 1, j):
            covered.add(v % n)
    cuts = tuple(v for v in range(n) if v not in covered)
    if not cuts:
        raise ValueError("no cut vertex: the diagram is not a finite half")

    ends = cuts[1:] + (cuts[0] + n,)
    spans = list(zip(cuts, ends))
    buckets: list[list[tuple[int, int]]] = [[] for _ in spans]
    for c, d in spans:
        if d - c >= 2 and (c, d) not in diagram.orbits:
            raise ValueError(f"span ({c}, {d}) is missing its top arc; input is not Ptolemy")
    placed = 0
    for a, b in diagram.orbits:
        for t, (c, d) in enumerate(spans):
            for shift in (0, 1):
                aa, bb = a + shift * n, b + shift * n
                if c <= aa and bb <= d:
                    if (aa, bb) != (c, d):
                        buckets[t].append((aa - c, bb - c))
                    placed += 1
                    break
            else:
                continue
            break
        else:
            raise ValueError(f"arc {(a, b)} straddles a cut; input is not a finite half")
    if placed != len(diagram.orbits):
        raise ValueError("arc placement is inconsistent")

    pieces = tuple(
        DEGENERATE if d - c == 1 else PolygonDiagram(d - c, tuple(bucket))
        for (c, d), bucket in zip(spans, buckets)
    )
    return WingDecomposition(n, cuts, pieces)


def compose(wings: WingDecomposition) -> PeriodicDiagram:
    """Inverse of :func:`decompose`: lay each piece onto its span."""
    n = wings.rank
    arcs: list[tuple[int, int]] = []
    for (c, _), piece in zip(wings.spans(), wings.pieces):
        if piece.size >= 2:
            arcs.append((c, c + piece.size))
            arcs.extend((c + a, c + b) for a, b in piece.diagonals)
    return PeriodicDiagram.from_arcs(n, arcs)


def statistics(diagram: PeriodicDiagram) -> CellStatistics:
    """Total triangle/clique/empty-cell counts over the wing decomposition."""
    stats = CellStatistics()
    for piece in decompose(diagram).pieces:
        stats = stats + statistics_polygon(piece)
    return stats


# ---------------------------------------------------------------------------
# pointed cycles


@dataclass(frozen=True)
class PointedCycle:
    """A cyclic sequence of polygon diagrams with one marked non-base vertex.

    ``vertex`` is 1-based: the marked label sits on the ``vertex``-th vertex
    of piece ``piece_index`` counted clockwise after that piece's base vertex.
    """

    pieces: tuple[PolygonDiagram, ...]
    piece_index: int
    vertex: int

    def __post_init__(self) -> None:
        if not self.pieces:
            raise ValueError("a pointed cycle needs at least one piece")
        if not 0 <= self.piece_index < len(self.pieces):
            raise ValueError("piece_index out of range")
        if not 1 <= self.vertex <= self.pieces[self.piece_index].size:
            raise ValueError("pointed vertex out of range for its piece")

    def total_size(self) -> int:
        return sum(p.size for p in self.pieces)

    def rotate(self, steps: int) -> "PointedCycle":
        r = len(self.pieces)
        steps %= r
        return PointedCycle(
            self.pieces[steps:] + self.pieces[:steps],
            (self.piece_index - steps) % r,
            self.vertex,
        )

    def canonical(self) -> "PointedCycle":
        """Rotate so the pointed piece comes last."""
        return self.rotate((self.piece_index + 1) % len(self.pieces))


def to_pointed_cycle(diagram: PeriodicDiagram) -> PointedCycle:
    """Finite half -> pointed cycle; the mark tracks which vertex is 0.

    Spans are read in cut order starting at the smallest cut, so vertex 0
    (equivalently n) always lands in the last piece, ``n - cuts[-1]`` steps
    after its base vertex.
    """
    wings = decompose(diagram)
    return PointedCycle(wings.pieces, len(wings.pieces) - 1, diagram.rank - wings.cuts[-1])


def from_pointed_cycle(cycle: PointedCycle, rank: int) -> PeriodicDiagram:
    """Pointed cycle -> finite half; total piece size must equal the rank.

    The pointed piece is laid down starting at ``-vertex`` (so the marked
    vertex gets coordinate 0) and the remaining pieces follow clockwise,
    each base vertex reusing the previous piece's last vertex.
    """
    if cycle.total_size() != rank:
        raise ValueError(f"piece sizes sum to {cycle.total_size()}, expected rank {rank}")
    arcs: list[tuple[int, int]] = []
    pos = -cycle.vertex
    r = len(cycle.pieces)
    for step in range(r):
        piece = cycle.pieces[(cycle.piece_index + step) % r]
        if piece.size >= 2:
            arcs.append((pos, pos + piece.size))
            arcs.extend((pos + a, pos + b) for a, b in piece.diagonals)
        pos += piece.size
    return PeriodicDiagram.from_arcs(rank, arcs)


# ---------------------------------------------------------------------------
# enumeration


def _orbit_pool(n: int) -> list[Arc]:
    return [(i, i + length) for length in range(2, n + 1) for i in range(n)]


def enumerate_brute(n: int, cap: int = DEFAULT_CAPS.brute_rank) -> list[PeriodicDiagram]:
    """All finite halves at rank n by brute force over orbit subsets.

    Every pair of orbits contributes a bitmask constraint: if two orbits
    cross (in some shift), the connectors of every crossing must be present,
    and a connector longer than n outlaws the pair altogether.  The scan
    then sweeps all ``2^(n(n-1))`` subsets.  This is the oracle the grammar
    enumeration is checked against.
    """
    if n > cap:
        raise CapExceeded(f"brute-force enumeration capped at rank {cap}, got {n}")
    pool = _orbit_pool(n)
    k = len(pool)
    if k == 0:
        return [PeriodicDiagram.empty(n)]
    index = {a: t for t, a in enumerate(pool)}
    constraints: list[tuple[int, int, int | None]] = []
    for p in range(k):
        for q in range(p, k):
            a, b = pool[p], pool[q]
            req = 0
            banned = False
            w = shift_window(n, a[1] - a[0], b[1] - b[0])
            for m in range(-w, w + 1):
                shifted = (b[0] + m * n, b[1] + m * n)
                if not cross(a, shifted):
                    continue
                u, v = (a, shifted) if a[0] < shifted[0] else (shifted, a)
                for pair in ((u[0], v[0]), (u[0], v[1]), (v[0], u[1]), (u[1], v[1])):
                    if pair[1] - pair[0] < 2:
                        continue
                    if pair[1] - pair[0] > n:
                        banned = True
                        break
                    req |= 1 << index[normalize_orbit(n, pair)]
                if banned:
                    break
            if banned:
                constraints.append((p, q, None))
            elif req:
                constraints.append((p, q, req))

    halves: list[PeriodicDiagram] = []
    total = 1 << k
    chunk = 1 << 22
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        valid = np.ones(masks.shape, dtype=bool)
        for p, q, req in constraints:
            both = ((masks >> np.uint64(p)) & (masks >> np.uint64(q)) & np.uint64(1)).astype(bool)
            if req is None:
                np.logical_and(valid, ~both, out=valid)
            else:
                ok = (masks & np.uint64(req)) == np.uint64(req)
                np.logical_and(valid, ~both | ok, out=valid)
        for mask in masks[valid]:
            mask = int(mask)
            orbits = frozenset(pool[t] for t in range(k) if mask >> t & 1)
            halves.append(PeriodicDiagram(n, orbits))
    halves.sort(key=lambda X: X.sorted_orbits())
    return halves


@functools.cache
def _piece_chunks(gap: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Per gap size, every piece as (base arc + diagonals) in span coordinates."""
    if gap == 1:
        return ((),)
    return tuple(((0, gap),) + P.diagonals for P in polygon_diagrams(gap))


def iter_structured(n: int, cap: int = DEFAULT_CAPS.structured_rank) -> Iterator[PeriodicDiagram]:
    """Generate every finite half at rank n through the cut/wing grammar.

    Iterates all nonempty cut subsets of ``Z/n``; every span of width g >= 2
    independently carries any polygon Ptolemy diagram of size g.  Each half
    is produced exactly once (the cut set and span contents are recoverable
    by :func:`decompose`).
    """
    if n > cap:
        raise CapExceeded(f"structured enumeration capped at rank {cap}, got {n}")
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    for mask in range(1, 1 << n):
        cuts = [v for v in range(n) if mask >> v & 1]
        ends = cuts[1:] + [cuts[0] + n]
        gaps = [d - c for c, d in zip(cuts, ends)]
        for combo in itertools.product(*(_piece_chunks(g) for g in gaps)):
            arcs = []
            for c, chunk in zip(cuts, combo):
                for a, b in chunk:
                    i = (c + a) % n
                    arcs.append((i, i + (b - a)))
            yield PeriodicDiagram(n, frozenset(arcs))


def _count_structured_masks(args: tuple[int, int, int]) -> int:
    """Count the halves produced by one range of cut-subset masks."""
    n, lo, hi = args
    total = 0
    for mask in range(lo, hi):
        cuts = [v for v in range(n) if mask >> v & 1]
        ends = cuts[1:] + [cuts[0] + n]
        for _ in itertools.product(*(_piece_chunks(d - c) for c, d in zip(cuts, ends))):
            total += 1
    return total


def count_structured(
    n: int, cap: int = DEFAULT_CAPS.structured_rank, workers: int = 1
) -> int:
    """Number of finite halves at rank n, through the grammar enumeration.

    With ``workers > 1`` the cut subsets are partitioned across processes and
    the per-subset tallies merged; the result is identical to counting
    :func:`iter_structured` (each subset contributes the product of its span
    choices, the same items the generator walks one by one).
    """
    if n > cap:
        raise CapExceeded(f"structured enumeration capped at rank {cap}, got {n}")
    if workers <= 1:
        return sum(1 for _ in iter_structured(n, cap))
    import concurrent.futures

    polygon_diagrams(n)  # warm the piece cache before forking
    total_masks = 1 << n
    step = max(1, total_masks // (workers * 8))
    ranges = [
        (n, lo, min(lo + step, total_masks)) for lo in range(1, total_masks, step)
    ]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_structured_masks, ranges))


@functools.lru_cache(maxsize=8)
def _structured_sorted(n: int) -> tuple[PeriodicDiagram, ...]:
    return tuple(sorted(iter_structured(n), key=lambda X: X.sorted_orbits()))


def enumerate_structured(n: int, cap: int = DEFAULT_CAPS.structured_rank) -> list[PeriodicDiagram]:
    """Sorted list of all finite halves at rank n (grammar enumeration)."""
    if n > cap:
        raise CapExceeded(f"structured enumeration capped at rank {cap}, got {n}")
    if n <= 6:
        return list(_structured_sorted(n))
    return sorted(iter_structured(n, cap), key=lambda X: X.sorted_orbits())


def sample_halves(n: int, count: int, seed: int = 0) -> list[PeriodicDiagram]:
    """Random finite halves at rank n: random cut set, random span contents.

    Deterministic for a fixed seed; not uniform over halves, which is fine
    for round-trip testing.
    """
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        mask = rng.randrange(1, 1 << n)
        cuts = [v for v in range(n) if mask >> v & 1]
        ends = cuts[1:] + [cuts[0] + n]
        pieces = tuple(
            rng.choice(polygon_diagrams(d - c)) for c, d in zip(cuts, ends)
        )
        out.append(compose(WingDecomposition(n, tuple(cuts), pieces)))
    return out


def torsion_pairs(n: int, cap: int = DEFAULT_CAPS.structured_rank) -> Iterator[TorsionPair]:
    """Every torsion pair at rank n: each half once as left-finite, once as
    right-finite, halves in canonical order."""
    for half in enumerate_structured(n, cap):
        yield TorsionPair(n, half, "left")
        yield TorsionPair(n, half, "right")


# ---------------------------------------------------------------------------
# translation symmetry


def fixed_under(n: int, d: int, cap: int = DEFAULT_CAPS.structured_rank) -> list[PeriodicDiagram]:
    """Finite halves at rank n invariant under tau^d, for d dividing n.

    These are exactly the d-periodic diagrams, i.e. rank-d finite halves
    repeated around the rank-n tube; their number is torsion_count(d)/2.
    """
    if d < 1 or n % d != 0:
        raise ValueError(f"{d} does not divide {n}")
    return [X for X in enumerate_structured(n, cap) if X.tau(d) == X]


def orbit_key(diagram: PeriodicDiagram) -> tuple:
    """Canonical representative key of a half's tau-orbit."""
    return min(tuple(diagram.tau(t).sorted_orbits()) for t in range(diagram.rank))


def _totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def orbit_count(n: int) -> int:
    """Number of tau-orbits of torsion pairs at rank n (Burnside average).

    ``tau^b`` fixes as many pairs as there are pairs at rank gcd(b, n), so
    the orbit count is ``(1/n) * sum_{d | n} phi(n/d) T(d)``.
    """
    total = sum(_totient(n // d) * torsion_count(d) for d in _divisors(n))
    if total % n:
        raise ArithmeticError("Burnside sum is not divisible by the group order")
    return total // n


def orbit_count_direct(n: int, cap: int = DEFAULT_CAPS.structured_rank) -> int:
    """Orbit count by direct partition of the enumerated pairs."""
    keys = {orbit_key(X) for X in iter_structured(n, cap)}
    return 2 * len(keys)


def orbit_count_refined(n: int) -> dict[tuple[int, int, int], int]:
    """tau-orbit counts refined by (triangles, cliques, empty cells)."""
    out: dict[tuple[int, int, int], int] = {}
    for k, l, m in refined_support(n):
        total = 0
        for d in _divisors(math.gcd(n, k, l, m)):
            total += _totient(d) * torsion_count_refined(n // d, k // d, l // d, m // d)
        if total % n:
            raise ArithmeticError("refined Burnside sum is not divisible by the group order")
        out[(k, l, m)] = total // n
    return out


def orbit_count_refined_direct(
    n: int, cap: int = DEFAULT_CAPS.structured_rank
) -> dict[tuple[int, int, int], int]:
    """Refined orbit counts by direct partition of the enumerated pairs."""
    seen: dict[tuple[int, int, int], set] = {}
    for X in iter_structured(n, cap):
        stats = statistics(X).as_tuple()
        seen.setdefault(stats, set()).add(orbit_key(X))
    return {stats: 2 * len(keys) for stats, keys in sorted(seen.items())}


def statistics_histogram(n: int, cap: int = DEFAULT_CAPS.structured_rank) -> Counter:
    """Histogram of pair statistics at rank n from the enumeration (each half
    counts twice: once per side)."""
    hist: Counter = Counter()
    for X in iter_structured(n, cap):
        hist[statistics(X).as_tuple()] += 2
    return hist
