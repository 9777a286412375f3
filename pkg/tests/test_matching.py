from itertools import combinations

import networkx as nx

from tperfect.graphs import (
    EarDecomposition, Graph, complete_graph, cycle_graph, has_perfect_matching,
    is_factor_critical, is_two_connected, iter_maximum_matchings, matching_number,
    max_matching, odd_ear_decomposition, wheel_graph,
)

from conftest import all_graphs, to_nx


def brute_nu(g):
    es = g.sorted_edges
    for k in range(len(es), 0, -1):
        for m in combinations(es, k):
            if len({v for e in m for v in e}) == 2 * k:
                return k
    return 0


def test_matching_number_against_networkx():
    for g in all_graphs(8)[::13]:
        m = max_matching(g)
        assert len({v for e in m for v in e}) == 2 * len(m)
        assert all(e in g.edges for e in m)
        assert len(m) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def test_matching_number_against_brute_force(small_graphs):
    for g in small_graphs:
        assert matching_number(g) == brute_nu(g)


def test_all_maximum_matchings_listed():
    g = cycle_graph(6)
    ms = set(iter_maximum_matchings(g))
    assert len(ms) == 2
    assert all(len(m) == 3 for m in ms)
    assert len(set(iter_maximum_matchings(complete_graph(4)))) == 3


def test_factor_critical_examples():
    assert is_factor_critical(cycle_graph(5))
    assert not is_factor_critical(cycle_graph(4))
    assert is_factor_critical(Graph(5, list(cycle_graph(5).edges) + [(1, 3)]))
    assert not has_perfect_matching(cycle_graph(5))
    assert has_perfect_matching(cycle_graph(6))


def test_factor_critical_against_definition(small_graphs):
    for g in small_graphs:
        expect = g.n % 2 == 1 and all(brute_nu(g.delete_vertex(v)[0]) * 2 == g.n - 1 for v in range(g.n))
        assert is_factor_critical(g) == expect


def test_ear_decomposition_examples():
    d = odd_ear_decomposition(cycle_graph(5))
    assert len(d.ears) == 1 and sorted(d.ears[0]) == [0, 1, 2, 3, 4]
    chord = Graph(5, list(cycle_graph(5).edges) + [(1, 3)])
    d = odd_ear_decomposition(chord)
    d.validate(chord)
    assert [len(e) for e in d.ears] == [3, 4]
    assert odd_ear_decomposition(cycle_graph(4)) is None


def test_ear_decomposition_exists_iff_2connected_factor_critical():
    # the ear theorem, checked on every graph up to 7 vertices
    for g in all_graphs(7):
        d = odd_ear_decomposition(g)
        expect = is_two_connected(g) and is_factor_critical(g)
        assert (d is not None) == expect
        if d is not None:
            d.validate(g)
            assert d.edges() == set(g.edges)


def test_validate_rejects_bad_decompositions():
    w = wheel_graph(5)
    bad = EarDecomposition(((0, 1, 2, 3, 4),))
    try:
        bad.validate(w)
    except AssertionError:
        pass
    else:
        raise AssertionError("spokes left uncovered but validate passed")
