import random

import pytest

from fracext import (CapacityError, ExtremalParams, Graph, MAX_VERTICES,
                     complement, complete, cycle, delete_vertices,
                     disjoint_union, distance_matrix, embeds_in_extremal,
                     empty_graph, extremal_edge_count, extremal_graph,
                     graph_stats, induced, is_connected, isolated_count, join,
                     matches_extremal, path, wiener_index)
from helpers import relabel


def test_basic_constructors():
    assert complete(5).edge_count() == 10
    assert cycle(6).edge_count() == 6
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert empty_graph(3).edge_count() == 0
    g = Graph.from_edges(4, [(2, 0), (3, 1), (0, 2)])  # duplicates collapse
    assert g.edges() == [(0, 2), (1, 3)]
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert not g.has_edge(0, 1)


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_degrees_and_stats():
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert g.degree(0) == 4
    assert sorted(g.degree_sequence()) == [1, 1, 1, 1, 4]
    st = graph_stats(g)
    assert (st.n, st.e, st.min_degree, st.connected) == (5, 4, 1, True)


def test_join_and_union_and_complement():
    assert join(complete(2), complete(3)) == complete(5)
    assert complement(empty_graph(4)) == complete(4)
    g = disjoint_union(complete(3), complete(2))
    assert g.n == 5 and g.edge_count() == 4
    assert not is_connected(g)
    assert is_connected(complement(g))


def test_induced_and_delete():
    c5 = cycle(5)
    sub = induced(c5, 0b00111)
    assert sub.edges() == [(0, 1), (1, 2)]
    rest = delete_vertices(c5, [0])
    assert rest.n == 4 and rest.edge_count() == 3
    assert isolated_count(c5) == 0
    assert isolated_count(disjoint_union(complete(1), complete(2))) == 1
    # removal mask semantics: drop both neighbors of a path end
    assert isolated_count(path(3), 0b010) == 2


def test_equality_and_hash():
    a = Graph.from_edges(4, [(0, 1), (2, 3)])
    b = Graph.from_edges(4, [(2, 3), (0, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph.from_edges(4, [(0, 1)])


def test_distance_and_wiener():
    d = distance_matrix(path(4))
    assert d[0][3] == 3 and d[1][2] == 1
    assert wiener_index(path(4)) == 10
    assert wiener_index(cycle(5)) == 15
    assert wiener_index(complete(6)) == 15
    with pytest.raises(ValueError):
        distance_matrix(disjoint_union(complete(2), complete(2)))


def test_capacity_cap():
    complete(MAX_VERTICES)  # the cap itself is fine
    with pytest.raises(CapacityError):
        complete(MAX_VERTICES + 1)


def test_extremal_params_validation():
    p = ExtremalParams(n=11, k=1, s=2)
    assert p.inner_size == 8 and p.independent_size == 1
    with pytest.raises(ValueError):
        ExtremalParams(n=11, k=0, s=2)
    with pytest.raises(ValueError):
        ExtremalParams(n=11, k=2, s=3)  # s < 2k
    with pytest.raises(ValueError):
        ExtremalParams(n=6, k=1, s=4)   # inner clique would be negative


def test_extremal_graph_shape():
    p = ExtremalParams(n=11, k=1, s=2)
    g = extremal_graph(p)
    assert g.n == 11
    assert g.edge_count() == extremal_edge_count(p) == 47
    # the s-clique dominates, the tail is independent
    for v in range(p.s):
        assert g.degree(v) == 10
    tail = range(p.s + p.inner_size, p.n)
    for v in tail:
        assert g.degree(v) == p.s
    tail_mask = sum(1 << v for v in tail)
    assert induced(g, tail_mask).edge_count() == 0
    assert min(g.degree_sequence()) == p.s


@pytest.mark.parametrize("n,k,s", [(11, 1, 2), (12, 1, 3), (16, 2, 5), (13, 2, 4)])
def test_matches_extremal_under_relabeling(n, k, s):
    p = ExtremalParams(n=n, k=k, s=s)
    g = extremal_graph(p)
    assert matches_extremal(g, p)
    rng = random.Random(n * 100 + s)
    for _ in range(5):
        perm = list(range(n))
        rng.shuffle(perm)
        assert matches_extremal(relabel(g, perm), p)


def test_matches_extremal_rejects_perturbations():
    p = ExtremalParams(n=11, k=1, s=2)
    g = extremal_graph(p)
    edges = g.edges()
    assert not matches_extremal(Graph.from_edges(11, edges[:-1]), p)
    assert not matches_extremal(complete(11), p)
    # right edge count, wrong shape
    assert not matches_extremal(cycle(11), ExtremalParams(n=11, k=1, s=5))


def test_embeds_in_extremal():
    p = ExtremalParams(n=11, k=1, s=2)
    g = extremal_graph(p)
    clique = 0b11
    assert embeds_in_extremal(g, 1, clique)
    # dropping inner edges keeps the embedding
    thinner = Graph.from_edges(11, [e for e in g.edges() if e != (2, 3)])
    assert embeds_in_extremal(thinner, 1, clique)
    # K11 leaves no isolated vertices behind the set, so no certificate
    assert not embeds_in_extremal(complete(11), 1, clique)
