from itertools import combinations, permutations

import networkx as nx
import pytest

from tperfect.graphs import (
    CycleLimitError, GuardError, Graph, co_line_graph, complement, complete_graph,
    contains_induced, contract_stable_neighborhood, cycle_graph, empty_graph,
    enumerate_cliques, enumerate_simple_cycles, enumerate_stable_sets, find_clique,
    find_subgraph, is_bipartite, is_isomorphic, is_two_connected, max_cliques_by_size,
    mycielski_grotzsch, omega, path_graph, prism_graph, shortest_odd_cycle,
    star_graph, two_coloring, wheel_graph,
)

from conftest import all_graphs, from_nx, to_nx


def brute_cliques(g):
    return {s for k in range(1, g.n + 1) for s in combinations(range(g.n), k)
            if all(g.has_edge(a, b) for a, b in combinations(s, 2))}


def brute_cycles(g):
    # vertex sequences up to rotation and reflection
    out = set()
    for k in range(3, g.n + 1):
        for vs in combinations(range(g.n), k):
            for p in permutations(vs[1:]):
                c = (vs[0],) + p
                if p[0] < p[-1] and all(g.has_edge(c[i], c[(i + 1) % k]) for i in range(k)):
                    out.add(c)
    return out


def test_complement_examples():
    assert complement(complete_graph(3)) == empty_graph(3)
    assert complement(complement(path_graph(4))) == path_graph(4)


def test_cliques_against_brute_force(small_graphs):
    for g in small_graphs:
        cl = set(enumerate_cliques(g))
        assert cl == brute_cliques(g)
        w = max((len(c) for c in cl), default=0)
        assert omega(g) == w
        assert set(max_cliques_by_size(g)) == {c for c in cl if len(c) == w}
        assert (find_clique(g, 3) is not None) == (w >= 3)


def test_stable_sets_examples():
    assert len(enumerate_stable_sets(cycle_graph(5))) == 11
    assert len(enumerate_stable_sets(complete_graph(3))) == 4
    assert len(enumerate_stable_sets(empty_graph(3))) == 8


def test_stable_sets_are_cliques_of_complement(small_graphs):
    for g in small_graphs:
        st = set(enumerate_stable_sets(g))
        assert st == brute_cliques(complement(g)) | {()}


def test_stable_set_guard():
    with pytest.raises(GuardError):
        enumerate_stable_sets(empty_graph(40))


def test_shortest_odd_cycle_examples():
    assert shortest_odd_cycle(cycle_graph(5))[0] == 5
    assert shortest_odd_cycle(wheel_graph(5))[0] == 3
    assert shortest_odd_cycle(from_nx(nx.hypercube_graph(3))) is None


def test_odd_cycles_and_bipartiteness_against_networkx():
    for g in all_graphs(7):
        G = to_nx(g)
        bip = nx.is_bipartite(G)
        assert is_bipartite(g) == bip
        res = shortest_odd_cycle(g)
        col = two_coloring(g)
        if bip:
            assert res is None
            assert all(col[u] != col[v] for u, v in g.edges)
        else:
            k, cyc = res
            assert col is None
            assert len(cyc) == k == len(set(cyc)) and k % 2 == 1
            assert all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))
            assert k == min(len(c) for c in nx.simple_cycles(G) if len(c) % 2)


def test_simple_cycle_examples():
    assert len(enumerate_simple_cycles(complete_graph(4))) == 7
    assert sorted(map(len, enumerate_simple_cycles(complete_graph(4)))) == [3, 3, 3, 3, 4, 4, 4]
    assert len(enumerate_simple_cycles(cycle_graph(5))) == 1
    assert enumerate_simple_cycles(star_graph(4)) == []


def test_simple_cycles_against_brute_force(small_graphs):
    for g in small_graphs:
        ours = enumerate_simple_cycles(g)
        assert len(ours) == len({tuple(c) for c in ours})
        assert {tuple(c) for c in ours} == brute_cycles(g)
        odd = enumerate_simple_cycles(g, parity=1, max_len=5)
        assert {tuple(c) for c in odd} == {c for c in brute_cycles(g) if len(c) % 2 and len(c) <= 5}


def test_simple_cycle_counts_match_networkx():
    for g in all_graphs(7)[::7]:
        assert len(enumerate_simple_cycles(g)) == sum(1 for _ in nx.simple_cycles(to_nx(g)))


def test_cycle_cap_is_an_error():
    with pytest.raises(CycleLimitError):
        enumerate_simple_cycles(complete_graph(7), cap=100)


def test_induced_embedding_examples():
    assert contains_induced(co_line_graph(prism_graph()), path_graph(6)) is None
    assert contains_induced(wheel_graph(5), complete_graph(4)) is None
    emb = contains_induced(cycle_graph(5), path_graph(4))
    assert emb is not None


def test_embeddings_against_brute_force():
    patterns = [path_graph(4), cycle_graph(4), complete_graph(3), star_graph(3), Graph(4, [(0, 1), (2, 3)])]
    for g in all_graphs(6):
        for p in patterns:
            brute_ind = brute_sub = False
            for s in combinations(range(g.n), p.n):
                for perm in permutations(s):
                    es = {(min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in p.edges}
                    inside = {e for e in g.edges if e[0] in s and e[1] in s}
                    brute_sub |= es <= inside
                    brute_ind |= es == inside
            emb = contains_induced(g, p)
            assert (emb is not None) == brute_ind
            if emb is not None:
                assert len(set(emb.values())) == p.n
                assert all(g.has_edge(emb[a], emb[b]) == p.has_edge(a, b)
                           for a, b in combinations(range(p.n), 2))
            sub = find_subgraph(g, p)
            assert (sub is not None) == brute_sub
            if sub is not None:
                assert all(g.has_edge(sub[a], sub[b]) for a, b in p.edges)


def test_isomorphism_against_networkx():
    gs = all_graphs(6)
    for g in gs[::5]:
        perm = list(range(g.n))[::-1]
        h = g.relabel(perm)
        m = is_isomorphic(g, h)
        assert m is not None and all(g.has_edge(m[a], m[b]) for a, b in h.edges)
    for a, b in combinations(all_graphs(5), 2):
        assert (is_isomorphic(a, b) is not None) == nx.is_isomorphic(to_nx(a), to_nx(b))


def test_contraction_examples():
    assert contract_stable_neighborhood(star_graph(3), 0) == Graph(1)
    assert contract_stable_neighborhood(cycle_graph(5), 2) == complete_graph(3)
    w = contract_stable_neighborhood(mycielski_grotzsch(), 0)
    assert is_isomorphic(w, wheel_graph(5)) is not None
    with pytest.raises(ValueError):
        contract_stable_neighborhood(wheel_graph(5), 5)


def test_two_connectivity_against_networkx(small_graphs):
    for g in small_graphs:
        expect = g.n >= 3 and nx.is_biconnected(to_nx(g))
        assert is_two_connected(g) == expect
