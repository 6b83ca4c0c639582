"""Arcs of the ∞-gon and their rank-n periodic orbit calculus.

An *arc* is a pair ``(i, j)`` of integers with ``j - i >= 2``, pictured as a
curve over the number line joining ``i`` and ``j``; its *length* is ``j - i``.
Fixing a rank ``n``, the shift ``(i, j) -> (i + n, j + n)`` generates the
orbit of an arc.  Orbits are the vertices of the Auslander-Reiten quiver of
the cluster tube of rank ``n`` (a half-infinite cylinder of circumference
``n``), and sets of orbits play the role of subcategories: an n-periodic
collection of arcs is stored here as a :class:`PeriodicDiagram`.

Everything reduces to the crossing predicate: two arcs cross iff their
endpoints strictly interleave.  On top of it this module provides the
dimension of ``Ext^1`` between two orbits, rigidity, the non-crossing
operator ``nc`` (as a membership oracle plus a bounded enumerator, since
``nc`` of a finite collection is infinite), the Ptolemy closure condition,
and the Auslander-Reiten translation ``tau: (i, j) -> (i - 1, j - 1)``.

All values are immutable and all operations are pure functions; callers may
fan out over them from any number of workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

Arc = tuple[int, int]


def is_arc(pair: tuple[int, int]) -> bool:
    """True iff the integer pair has length at least 2."""
    return pair[1] - pair[0] >= 2


def check_arc(pair: tuple[int, int]) -> Arc:
    i, j = pair
    if j - i < 2:
        raise ValueError(f"not an arc (length {j - i} < 2): {pair!r}")
    return (i, j)


def arc_length(a: Arc) -> int:
    return a[1] - a[0]


def cross(a: Arc, b: Arc) -> bool:
    """Strict interleaving of endpoints.

    Arcs sharing an endpoint do not cross, and neither do nested arcs.
    The predicate is symmetric and irreflexive.
    """
    return a[0] < b[0] < a[1] < b[1] or b[0] < a[0] < b[1] < a[1]


def normalize_orbit(n: int, arc: tuple[int, int]) -> Arc:
    """Canonical orbit representative: left endpoint shifted into ``[0, n)``."""
    i, j = check_arc(arc)
    r = i % n
    return (r, r + (j - i))


def shift_window(n: int, len_a: int, len_b: int) -> int:
    """Half-width of the shift scan needed to find every crossing.

    Two arcs whose spans do not overlap cannot cross, so only shifts
    ``|m| <= ceil((len_a + len_b)/n) + 1`` can produce a crossing between a
    representative of one orbit and a shifted representative of the other.
    The bound over-covers by one on purpose; the test suite asserts that
    widening it further finds nothing new.
    """
    return -((len_a + len_b) // -n) + 1


def orbits_cross(n: int, a: Arc, b: Arc) -> bool:
    """True iff some shift ``(b[0] + m*n, b[1] + m*n)`` crosses ``a``."""
    w = shift_window(n, a[1] - a[0], b[1] - b[0])
    for m in range(-w, w + 1):
        if cross(a, (b[0] + m * n, b[1] + m * n)):
            return True
    return False


def _count_interior_shifts(n: int, i: int, j: int, v: int) -> int:
    """Number of integers m with ``i < v + m*n < j``."""
    lo = (i - v) // n + 1
    hi = -((-(j - v)) // n) - 1
    return max(0, hi - lo + 1)


def ext1_dim(n: int, a: Arc, b: Arc) -> int:
    """Dimension of ``Ext^1`` between the orbits of ``a`` and ``b`` at rank n.

    With ``(i, j)`` the shorter and ``(k, l)`` the longer of the two arcs,
    this counts the shifts of ``k`` and of ``l`` falling strictly inside
    ``(i, j)``; the result is symmetric in the arguments.
    """
    if a[1] - a[0] > b[1] - b[0]:
        a, b = b, a
    i, j = a
    k, l = b
    return _count_interior_shifts(n, i, j, k) + _count_interior_shifts(n, i, j, l)


def is_rigid(n: int, a: Arc) -> bool:
    """No shift of an arc by a multiple of n crosses the arc iff length <= n."""
    return a[1] - a[0] <= n


def _ptolemy_completions(u: Arc, v: Arc) -> list[Arc]:
    """The four connector pairs of a crossing pair, kept only when they are arcs."""
    if v[0] < u[0]:
        u, v = v, u
    i, j = u
    r, s = v
    out = []
    for p in ((i, r), (i, s), (r, j), (j, s)):
        if p[1] - p[0] >= 2:
            out.append(p)
    return out


@dataclass(frozen=True)
class PeriodicDiagram:
    """A finite set of arc orbits at a fixed rank, i.e. an n-periodic
    collection of arcs of the ∞-gon.

    ``orbits`` holds canonical representatives only (left endpoint in
    ``[0, rank)``); use :meth:`from_arcs` to build from arbitrary shifts.
    """

    rank: int
    orbits: frozenset[Arc]

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        for i, j in self.orbits:
            if j - i < 2:
                raise ValueError(f"not an arc: {(i, j)!r}")
            if not 0 <= i < self.rank:
                raise ValueError(f"orbit {(i, j)!r} not in canonical form at rank {self.rank}")

    @classmethod
    def from_arcs(cls, rank: int, arcs: Iterable[tuple[int, int]]) -> "PeriodicDiagram":
        return cls(rank, frozenset(normalize_orbit(rank, a) for a in arcs))

    @classmethod
    def empty(cls, rank: int) -> "PeriodicDiagram":
        return cls(rank, frozenset())

    def sorted_orbits(self) -> list[Arc]:
        """Serialization order: by (length, left endpoint)."""
        return sorted(self.orbits, key=lambda a: (a[1] - a[0], a[0]))

    def contains_arc(self, arc: tuple[int, int]) -> bool:
        return normalize_orbit(self.rank, arc) in self.orbits

    def max_length(self) -> int:
        return max((j - i for i, j in self.orbits), default=0)

    def tau(self, power: int = 1) -> "PeriodicDiagram":
        """Apply the translation ``(i, j) -> (i - power, j - power)`` orbitwise.

        ``tau`` is a bijection of diagrams and ``tau(n)`` is the identity.
        """
        n = self.rank
        return PeriodicDiagram(
            n, frozenset(((i - power) % n, (i - power) % n + (j - i)) for i, j in self.orbits)
        )

    def to_json(self) -> str:
        return json.dumps(
            {"rank": self.rank, "orbits": [list(a) for a in self.sorted_orbits()]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "PeriodicDiagram":
        data = json.loads(text)
        return cls.from_arcs(data["rank"], (tuple(a) for a in data["orbits"]))


def nc_contains(diagram: PeriodicDiagram, arc: tuple[int, int]) -> bool:
    """Membership oracle for ``nc X``: does the arc cross no arc of X?

    ``nc X`` is infinite whenever X is nonempty and finite-sided, so it is
    never materialized; this oracle plus :func:`nc_enumerate` is the whole
    interface.
    """
    a = normalize_orbit(diagram.rank, arc)
    return not any(orbits_cross(diagram.rank, a, b) for b in diagram.orbits)


def nc_enumerate(diagram: PeriodicDiagram, max_length: int) -> PeriodicDiagram:
    """All orbits of length <= max_length whose arcs cross nothing in X."""
    if max_length < 2:
        raise ValueError(f"max_length must be >= 2, got {max_length}")
    n = diagram.rank
    kept = [
        (i, i + length)
        for length in range(2, max_length + 1)
        for i in range(n)
        if nc_contains(diagram, (i, i + length))
    ]
    return PeriodicDiagram(n, frozenset(kept))


def iter_crossing_pairs(diagram: PeriodicDiagram) -> Iterator[tuple[Arc, Arc]]:
    """All crossing pairs (representative, shifted representative) of a diagram,
    up to the global shift: every crossing in the full arc collection is a
    shift of one reported here."""
    n = diagram.rank
    reps = diagram.sorted_orbits()
    for ia, a in enumerate(reps):
        for b in reps[ia:]:
            w = shift_window(n, a[1] - a[0], b[1] - b[0])
            for m in range(-w, w + 1):
                if a == b and m == 0:
                    continue
                shifted = (b[0] + m * n, b[1] + m * n)
                if cross(a, shifted):
                    yield a, shifted


def is_ptolemy(diagram: PeriodicDiagram, max_completion_length: int | None = None) -> bool:
    """Ptolemy condition: every crossing pair forces its four connectors.

    For each crossing pair of arcs drawn from the diagram, each connector
    pair of length >= 2 must again lie in the diagram (length-1 pairs are not
    arcs and impose nothing).  When ``max_completion_length`` is given,
    connectors longer than the bound are skipped; that is the right check for
    a length-truncated slice of a known Ptolemy collection, e.g. the output
    of :func:`nc_enumerate`.
    """
    for a, b in iter_crossing_pairs(diagram):
        for p in _ptolemy_completions(a, b):
            if max_completion_length is not None and p[1] - p[0] > max_completion_length:
                continue
            if not diagram.contains_arc(p):
                return False
    return True


def tau(diagram: PeriodicDiagram, power: int = 1) -> PeriodicDiagram:
    """Functional alias for :meth:`PeriodicDiagram.tau`."""
    return diagram.tau(power)
