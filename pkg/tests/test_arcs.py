import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustertubes.arcs import (
    PeriodicDiagram,
    cross,
    ext1_dim,
    is_ptolemy,
    is_rigid,
    nc_contains,
    nc_enumerate,
    normalize_orbit,
    orbits_cross,
    shift_window,
)

arcs = st.builds(lambda i, length: (i, i + length), st.integers(-30, 30), st.integers(2, 12))


def orbit_strategy(n: int, max_len: int):
    return st.builds(
        lambda i, length: (i, i + length), st.integers(0, n - 1), st.integers(2, max_len)
    )


def diagram_strategy(n: int, max_len: int):
    return st.builds(
        lambda orbits: PeriodicDiagram(n, frozenset(orbits)),
        st.frozensets(orbit_strategy(n, max_len), max_size=6),
    )


def all_orbits(n: int, max_len: int):
    return [(i, i + length) for length in range(2, max_len + 1) for i in range(n)]


# ---- crossing ----------------------------------------------------------------


def test_cross_basic_cases():
    assert cross((0, 2), (1, 3))
    assert not cross((0, 2), (2, 4))  # shared endpoint
    assert not cross((0, 5), (1, 3))  # nested


@given(arcs, arcs)
def test_cross_symmetric(a, b):
    assert cross(a, b) == cross(b, a)


@given(arcs)
def test_cross_irreflexive(a):
    assert not cross(a, a)


@given(st.integers(1, 5), arcs, arcs)
def test_crossing_window_is_wide_enough(n, a, b):
    a = normalize_orbit(n, a)
    b = normalize_orbit(n, b)
    w = shift_window(n, a[1] - a[0], b[1] - b[0])
    inside = {m for m in range(-w, w + 1) if cross(a, (b[0] + m * n, b[1] + m * n))}
    wider = {
        m
        for m in range(-w - 4, w + 5)
        if cross(a, (b[0] + m * n, b[1] + m * n))
    }
    assert inside == wider


def test_orbits_cross_cases():
    assert orbits_cross(2, (0, 2), (1, 3))
    assert not orbits_cross(2, (0, 2), (0, 2))
    assert orbits_cross(2, (0, 3), (0, 3))  # the shift (2, 5) crosses (0, 3)


# ---- Ext^1 -------------------------------------------------------------------


def test_ext1_cases():
    assert ext1_dim(2, (0, 2), (1, 3)) == 2
    assert ext1_dim(2, (0, 2), (0, 2)) == 0
    assert ext1_dim(2, (0, 3), (0, 3)) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ext1_symmetric_and_matches_crossing(n):
    pool = all_orbits(n, 2 * n)
    for a, b in itertools.combinations_with_replacement(pool, 2):
        d1, d2 = ext1_dim(n, a, b), ext1_dim(n, b, a)
        assert d1 == d2
        assert (d1 > 0) == orbits_cross(n, a, b)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rigid_iff_self_ext_vanishes(n):
    for a in all_orbits(n, 3 * n):
        assert is_rigid(n, a) == (a[1] - a[0] <= n)
        assert is_rigid(n, a) == (ext1_dim(n, a, a) == 0)


def test_rigid_boundary():
    assert is_rigid(2, (0, 2))
    assert not is_rigid(2, (0, 3))
    assert is_rigid(5, (0, 5))


# ---- nc ----------------------------------------------------------------------


def test_nc_contains_cases():
    empty = PeriodicDiagram.empty(3)
    assert nc_contains(empty, (0, 7))
    X = PeriodicDiagram.from_arcs(2, [(0, 2)])
    assert not nc_contains(X, (1, 3))
    assert nc_contains(X, (2, 4))  # a shift of (0, 2); shifts never cross


def test_nc_enumerate_cases():
    assert len(nc_enumerate(PeriodicDiagram.empty(2), 3).orbits) == 4
    X = PeriodicDiagram.from_arcs(2, [(0, 2)])
    assert nc_enumerate(X, 2).orbits == frozenset({(0, 2)})
    both = PeriodicDiagram.from_arcs(2, [(0, 2), (1, 3)])
    assert nc_enumerate(both, 4).orbits == frozenset()
    with pytest.raises(ValueError):
        nc_enumerate(X, 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: diagram_strategy(n, 2 * n)))
def test_nc_is_ptolemy(X):
    sliced = nc_enumerate(X, 2 * X.rank + 2)
    assert is_ptolemy(sliced, max_completion_length=2 * X.rank + 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: diagram_strategy(n, 2 * n)), arcs)
def test_tau_commutes_with_nc(X, arc):
    shifted = (arc[0] - 1, arc[1] - 1)
    assert nc_contains(X.tau(), shifted) == nc_contains(X, arc)


# ---- Ptolemy condition ---------------------------------------------------------


def test_is_ptolemy_cases():
    assert is_ptolemy(PeriodicDiagram.empty(2))
    assert is_ptolemy(PeriodicDiagram.from_arcs(2, [(0, 2)]))
    # the crossing forces (0, 3), whose orbit is absent
    assert not is_ptolemy(PeriodicDiagram.from_arcs(2, [(0, 2), (1, 3)]))


def test_long_orbit_self_crossing_needs_completions():
    # (0, 3) at rank 2 crosses its own shift; the forced (0, 5) is absent
    assert not is_ptolemy(PeriodicDiagram.from_arcs(2, [(0, 3)]))


# ---- tau ----------------------------------------------------------------------


def test_tau_cases():
    X = PeriodicDiagram.from_arcs(2, [(0, 2)])
    assert X.tau() == PeriodicDiagram.from_arcs(2, [(1, 3)])
    assert PeriodicDiagram.empty(3).tau() == PeriodicDiagram.empty(3)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: diagram_strategy(n, 2 * n)))
def test_tau_power_rank_is_identity(X):
    assert X.tau(X.rank) == X
    assert X.tau(1).tau(X.rank - 1) == X


# ---- values and serialization ---------------------------------------------------


def test_normalize_and_validation():
    assert normalize_orbit(3, (-1, 4)) == (2, 7)
    with pytest.raises(ValueError):
        normalize_orbit(3, (1, 2))
    with pytest.raises(ValueError):
        PeriodicDiagram(2, frozenset({(2, 4)}))  # not canonical
    with pytest.raises(ValueError):
        PeriodicDiagram(0, frozenset())


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: diagram_strategy(n, 2 * n)))
def test_json_round_trip_is_bit_exact(X):
    text = X.to_json()
    assert PeriodicDiagram.from_json(text) == X
    assert PeriodicDiagram.from_json(text).to_json() == text
