import itertools
import random

from fracext import Graph, complement, complete, cycle, disjoint_union, is_connected
from fracext.corpus import (all_graphs, are_isomorphic, canonical_form,
                            complement_corpus, connected_graphs, graph_from_canonical,
                            sparse_graphs)
from helpers import random_graph, relabel

# counts frozen from the standard unlabeled enumeration sequences
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
CONN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def test_enumeration_counts():
    for n, want in ALL_COUNTS.items():
        assert len(all_graphs(n)) == want, n
    for n, want in CONN_COUNTS.items():
        got = connected_graphs(n)
        assert len(got) == want, n
        assert all(is_connected(g) for g in got)


def test_enumeration_is_duplicate_free():
    for n in range(1, 7):
        forms = [canonical_form(g) for g in all_graphs(n)]
        assert len(set(forms)) == len(forms)


def test_cross_enumeration_brute_force():
    """Canonical classes of all 2^10 labeled graphs on 5 vertices."""
    pairs = list(itertools.combinations(range(5), 2))
    seen = set()
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
        seen.add(canonical_form(Graph.from_edges(5, edges)))
    assert len(seen) == 34
    assert seen == {canonical_form(g) for g in all_graphs(5)}


def test_canonical_form_is_relabeling_invariant():
    rng = random.Random(401)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 8), rng.random())
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(relabel(g, perm))


def test_graph_from_canonical_round_trip():
    rng = random.Random(402)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        back = graph_from_canonical(canonical_form(g))
        assert are_isomorphic(g, back)


def test_are_isomorphic_hard_pairs():
    assert are_isomorphic(cycle(6), relabel(cycle(6), [3, 1, 4, 5, 0, 2]))
    # same degree sequence, different graphs
    assert not are_isomorphic(cycle(6), disjoint_union(complete(3), complete(3)))
    k33 = Graph.from_edges(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)])
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                                 (0, 3), (1, 4), (2, 5)])
    assert not are_isomorphic(k33, prism)
    assert not are_isomorphic(complete(4), complete(5))


def test_sparse_graphs_against_filter():
    want = {canonical_form(g) for g in all_graphs(5) if g.edge_count() <= 3}
    got = sparse_graphs(5, 3)
    assert {canonical_form(g) for g in got} == want
    assert all(g.edge_count() <= 3 for g in got)


def test_complement_corpus():
    corpus = complement_corpus(6, 4)
    want = {canonical_form(complement(g)) for g in sparse_graphs(6, 4)}
    assert {canonical_form(g) for g in corpus} == want
    assert all(g.edge_count() >= 15 - 4 for g in corpus)
