import itertools

import pytest

from clustertubes.config import CapExceeded
from clustertubes.polygons import (
    DEGENERATE,
    Cell,
    CellKind,
    CellStatistics,
    MixedFaceError,
    PolygonDiagram,
    cells,
    compose_base,
    decompose_base,
    enumerate_polygon,
    is_ptolemy_polygon,
    polygon_diagrams,
    statistics_polygon,
    statistics_recursive,
)
from clustertubes.series import series_P


def test_diagram_validation():
    with pytest.raises(ValueError):
        PolygonDiagram(3, ((0, 3),))  # the base edge is implicit
    with pytest.raises(ValueError):
        PolygonDiagram(3, ((1, 2),))  # a side, not a diagonal
    with pytest.raises(ValueError):
        PolygonDiagram(3, ((2, 5),))  # out of range
    assert PolygonDiagram(4, ((1, 3), (1, 3))).diagonals == ((1, 3),)  # dedup


def test_is_ptolemy_polygon_cases():
    assert is_ptolemy_polygon(PolygonDiagram(3))
    assert is_ptolemy_polygon(PolygonDiagram(3, ((0, 2), (1, 3))))  # full clique
    assert not is_ptolemy_polygon(PolygonDiagram(4, ((0, 2), (1, 3))))  # missing (0, 3)


def test_enumerate_polygon_counts():
    assert [len(enumerate_polygon(m)) for m in range(1, 6)] == [1, 1, 4, 17, 82]


def test_enumerate_polygon_cap():
    with pytest.raises(CapExceeded):
        enumerate_polygon(9)
    with pytest.raises(ValueError):
        enumerate_polygon(0)


@pytest.mark.parametrize("m", range(1, 7))
def test_brute_force_equals_grammar(m):
    assert set(enumerate_polygon(m)) == set(polygon_diagrams(m))


def test_brute_force_equals_grammar_count_size_seven():
    assert len(enumerate_polygon(7)) == len(polygon_diagrams(7)) == 2274


@pytest.mark.parametrize("m", [7, 8])
def test_grammar_output_is_valid_and_duplicate_free(m):
    diagrams = polygon_diagrams(m)
    assert len(set(diagrams)) == len(diagrams)
    for diagram in diagrams:
        assert is_ptolemy_polygon(diagram)


@pytest.mark.parametrize("m", range(1, 8))
def test_counts_match_series(m):
    P = series_P(7, 1, 1, 1)
    assert len(polygon_diagrams(m)) == P.coeffs[m]


@pytest.mark.parametrize("m", range(1, 7))
def test_multivariate_refinement_matches_series(m):
    P = series_P(6)
    want = P.coeffs[m]
    hist = {}
    for diagram in polygon_diagrams(m):
        t, c, e = statistics_polygon(diagram).as_tuple()
        hist[(t, c, e)] = hist.get((t, c, e), 0) + 1
    assert hist == {exp: coeff for exp, coeff in want.terms}


def test_cells_cases():
    split = cells(PolygonDiagram(3, ((0, 2),)))
    assert [c.kind for c in split] == [CellKind.TRIANGLE, CellKind.TRIANGLE]
    assert [c.vertices for c in split] == [(0, 1, 2), (0, 2, 3)]

    empty = cells(PolygonDiagram(3))
    assert empty == [Cell((0, 1, 2, 3), CellKind.EMPTY_CELL)]

    clique = cells(PolygonDiagram(3, ((0, 2), (1, 3))))
    assert clique == [Cell((0, 1, 2, 3), CellKind.CLIQUE)]

    assert cells(DEGENERATE) == []


def test_statistics_cases():
    assert statistics_polygon(DEGENERATE) == CellStatistics(0, 0, 0)
    assert statistics_polygon(PolygonDiagram(2)) == CellStatistics(1, 0, 0)
    assert statistics_polygon(PolygonDiagram(3, ((1, 3),))) == CellStatistics(2, 0, 0)


@pytest.mark.parametrize("m", range(1, 8))
def test_no_mixed_faces_on_valid_diagrams(m):
    for diagram in polygon_diagrams(m):
        cells(diagram)  # must not raise


def test_mixed_face_raises():
    # (0,2) and (1,3) cross, (0,3) missing: not Ptolemy, the face over the base
    # has exactly one of its two connectors
    with pytest.raises(MixedFaceError):
        cells(PolygonDiagram(4, ((0, 2), (1, 3))))


def test_decompose_base_cases():
    assert decompose_base(DEGENERATE) == (None, [])

    cell, subs = decompose_base(PolygonDiagram(3, ((0, 2), (1, 3))))
    assert cell == Cell((0, 1, 2, 3), CellKind.CLIQUE)
    assert subs == [DEGENERATE, DEGENERATE, DEGENERATE]

    cell, subs = decompose_base(PolygonDiagram(4, ((0, 2),)))
    assert cell.vertices == (0, 2, 3, 4)
    assert [s.size for s in subs] == [2, 1, 1]


@pytest.mark.parametrize("m", range(1, 7))
def test_decompose_base_reassembles(m):
    for diagram in polygon_diagrams(m):
        cell, subs = decompose_base(diagram)
        assert compose_base(cell, subs) == diagram
        assert statistics_recursive(diagram) == statistics_polygon(diagram)


@pytest.mark.parametrize("m", range(1, 7))
def test_base_cases_are_exclusive_and_exhaustive(m):
    for diagram in polygon_diagrams(m):
        cell, subs = decompose_base(diagram)
        if diagram.is_degenerate:
            assert cell is None
        else:
            assert cell is not None and cell.kind in CellKind
            assert sum(s.size for s in subs) == diagram.size


@pytest.mark.parametrize("m", range(1, 7))
def test_crossed_diagonals_live_inside_clique_cells(m):
    for diagram in polygon_diagrams(m):
        crossed = set()
        for c, d in itertools.combinations(diagram.diagonals, 2):
            if c[0] < d[0] < c[1] < d[1] or d[0] < c[0] < d[1] < c[1]:
                crossed.update((c, d))
        inside_cliques = set()
        for cell in cells(diagram):
            if cell.kind is CellKind.CLIQUE:
                vs = cell.vertices
                t = len(vs) - 1
                for x in range(t + 1):
                    for y in range(x + 2, t + 1):
                        if (x, y) != (0, t):
                            inside_cliques.add((vs[x], vs[y]))
        assert crossed == inside_cliques


def test_json_round_trip():
    diagram = PolygonDiagram(4, ((0, 2), (2, 4)))
    assert PolygonDiagram.from_json(diagram.to_json()) == diagram
    assert diagram.to_json() == '{"size":4,"diagonals":[[0,2],[2,4]]}'
