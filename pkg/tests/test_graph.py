from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from app.models import INFINITY, ColoredGraph, EdgeColor
from app.utils.errors import InvalidInputError, WitnessNotFoundError

RED, BLUE = EdgeColor.RED, EdgeColor.BLUE

# Two alternating 4-cycles, a red triangle hanging off the first and an isolated red triangle
BRANCHING_GRAPH = ColoredGraph(
    vertices=tuple(range(12)),
    red_edges=((0, 1), (3, 2), (3, 4), (2, 4), (5, 6), (7, 8), (9, 10), (10, 11), (11, 9)),
    blue_edges=((1, 3), (2, 0), (6, 7), (8, 5)),
)


def graph_from_labels(labels):
    """Vertex i joins red class labels[i][0] and blue class labels[i][1]"""
    red = [(i, j) for i, j in combinations(range(len(labels)), 2) if labels[i][0] == labels[j][0]]
    blue = [(i, j) for i, j in combinations(range(len(labels)), 2) if labels[i][1] == labels[j][1]]
    return ColoredGraph(vertices=tuple(range(len(labels))), red_edges=tuple(red), blue_edges=tuple(blue))


def both_colors(g: ColoredGraph) -> bool:
    adj = g.adjacency()
    return all({color for _, color in adj[k]} == {RED, BLUE} for k in g.vertices)


def test_branching_graph_reduction(graph_service):
    reduced = graph_service.reduce_graph(BRANCHING_GRAPH)
    assert reduced.vertices == (0, 1, 2, 3, 5, 6, 7, 8)
    assert set(reduced.red_edges) == {(0, 1), (2, 3), (5, 6), (7, 8)}
    assert set(reduced.blue_edges) == {(1, 3), (0, 2), (6, 7), (5, 8)}
    assert both_colors(reduced)


def test_branching_graph_reduction_by_portions(graph_service):
    assert graph_service.reduce_graph_by_portions(BRANCHING_GRAPH).vertices == (0, 1, 2, 3, 5, 6, 7, 8)


def test_branching_graph_cycle(graph_service):
    has_cycle, cycle = graph_service.has_two_colored_cycle(BRANCHING_GRAPH)
    assert has_cycle
    assert cycle.vertices == (0, 1, 3, 2)
    assert cycle.edge_colors == (RED, BLUE, RED, BLUE)
    assert graph_service.naive_two_colored_cycle(BRANCHING_GRAPH)


def test_branching_graph_components(graph_service):
    summary = graph_service.component_summary(BRANCHING_GRAPH)
    assert summary.sizes == {3: 1, 4: 1, 5: 1}
    assert summary.g_value == 5


def test_portion(graph_service):
    assert graph_service.portion(BRANCHING_GRAPH, 4, BLUE).vertices == (4,)
    assert graph_service.portion(BRANCHING_GRAPH, 0, RED).vertices == (0, 1, 2, 3, 4)
    with pytest.raises(InvalidInputError):
        graph_service.portion(BRANCHING_GRAPH, 40, RED)


def test_kdv_cycle(graph_service, kdv):
    g = graph_service.build_graph(kdv, 7, 3)
    has_cycle, cycle = graph_service.has_two_colored_cycle(g)
    assert has_cycle
    assert cycle.vertices == (-2, -1, 2, 1)
    assert (cycle.red_slope, cycle.blue_slope) == (7, 3)
    assert graph_service.validate_cycle(kdv, cycle)
    assert graph_service.naive_two_colored_cycle(g)

    summary = graph_service.component_summary(g)
    assert summary.sizes == {6: 1}
    assert summary.g_finite


def test_kdv_graph_is_simple_and_transitive(graph_service, kdv):
    for v1, v2 in [(7, 3), (7, 13), (13, 49), (21, 19)]:
        g = graph_service.build_graph(kdv, v1, v2)
        assert not set(g.red_edges) & set(g.blue_edges)
        for color in EdgeColor:
            edges = set(g.edges(color))
            for (a, b), (c, d) in combinations(edges, 2):
                shared = {a, b} & {c, d}
                if len(shared) == 1:
                    rest = tuple(sorted(({a, b} | {c, d}) - shared))
                    assert rest in edges


def test_kdv_paths(graph_service, kdv):
    g = graph_service.build_graph(kdv, 7, 3)
    path = graph_service.find_alternative_path(g, 2)
    assert len(path.vertices) == 4
    assert path.edge_colors == (RED, BLUE, RED)
    assert graph_service.validate_path(kdv, path)
    with pytest.raises(WitnessNotFoundError):
        graph_service.find_alternative_path(g, 10)


def test_schrodinger_ladder(graph_service, schrodinger):
    g = graph_service.build_graph(schrodinger, 0, 1)
    assert g.is_ladder
    assert graph_service.has_two_colored_cycle(g) == (False, None)
    assert graph_service.component_summary(g).g_value == INFINITY

    path = graph_service.find_alternative_path(g, 3)
    assert path.vertices == (1, -1, 2, -2, 3, -3)
    assert graph_service.validate_path(schrodinger, path)


def test_ladder_reduction(graph_service, schrodinger):
    # an even family sum fixes s/2, so every chain is one-way and peels away
    assert graph_service.reduce_graph(graph_service.build_graph(schrodinger, 0, 1)).vertices == ()
    odd = graph_service.build_graph(schrodinger, 1, 3)
    assert graph_service.reduce_graph(odd).vertices == odd.vertices


@pytest.mark.parametrize("v1, v2", [(v1, v2) for v1 in range(-3, 4) for v2 in range(-3, 4)
                                    if v1 and v2 and v1 != v2 and v1 != 2 * v2 and v2 != 2 * v1 and 2 * v2 != 3 * v1])
def test_schrodinger_path_labels(graph_service, schrodinger, v1, v2):
    path = graph_service.find_alternative_path(graph_service.build_graph(schrodinger, v1, v2), 3)
    assert path.vertices == (v1 - v2, v2, 0, v1, v2 - v1, 2 * v1 - v2)


def test_single_family_closure(graph_service, quartic):
    g = graph_service.build_graph(quartic, 0, 2)
    assert g.red_families == (0,)
    assert not graph_service.has_two_colored_cycle(g)[0]
    summary = graph_service.component_summary(g)
    assert summary.family_pairs
    assert summary.g_value == 3


def test_equal_slopes_rejected(graph_service, kdv):
    with pytest.raises(InvalidInputError):
        graph_service.build_graph(kdv, Fraction(7), 7)


labelled_graphs = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=2, max_size=10, unique=True)


@given(labelled_graphs)
@settings(max_examples=200, deadline=None)
def test_cycle_detector_matches_brute_force(graph_service, labels):
    g = graph_from_labels(labels)
    has_cycle, cycle = graph_service.has_two_colored_cycle(g)
    assert has_cycle == graph_service.naive_two_colored_cycle(g)
    if has_cycle:
        adj = g.adjacency()
        size = len(cycle.vertices)
        for i, color in enumerate(cycle.edge_colors):
            assert (cycle.vertices[(i + 1) % size], color) in adj[cycle.vertices[i]]


@given(labelled_graphs)
@settings(max_examples=200, deadline=None)
def test_reductions_agree(graph_service, labels):
    g = graph_from_labels(labels)
    reduced = graph_service.reduce_graph(g)
    assert reduced.vertices == graph_service.reduce_graph_by_portions(g).vertices
    assert both_colors(reduced)
