from collections import Counter
from itertools import combinations
from math import ceil

import pytest

import tperfect.coloring as coloring
from tperfect.coloring import (
    CoverElement, ForbiddenInduced, PreconditionError, StarTriangleCover, ceil_chif_coloring,
    cm_cover, cover_to_coloring, four_color_col, gamma_exact, spanning_c5,
    stable_set_hitting_max_cliques, structured_cover, three_color_structured,
)
from tperfect.graph6 import decode_graph6
from tperfect.graphs import (
    Graph, GuardError, chromatic_number_exact, co_line_graph, complement, complete_graph,
    cycle_graph, disjoint_union, find_subgraph, is_factor_critical, is_isomorphic, is_two_connected,
    matching_number, max_cliques_by_size, prism_graph, wheel_graph,
)
from tperfect.polytope import fractional_chromatic_hperfect
from tperfect.recognition import LongOddCircuit, check_root_conditions, h_perfect_root

from conftest import all_graphs, atlas_roots


def valid_roots():
    """Roots of t-perfect co-line graphs without induced co-L(Pi) or co-L(W5)."""
    for h in atlas_roots():
        if matching_number(h) > 3 or not check_root_conditions(h)[0]:
            continue
        if find_subgraph(h, prism_graph()) or find_subgraph(h, wheel_graph(5)):
            continue
        yield h


def test_gamma_examples():
    assert gamma_exact(wheel_graph(5))[0] == 4
    assert gamma_exact(complete_graph(5))[0] == 3
    assert gamma_exact(cycle_graph(5))[0] == 3
    assert gamma_exact(Graph(3))[0] == 0
    with pytest.raises(GuardError):
        gamma_exact(complete_graph(10))


def test_gamma_equals_chromatic_number_of_complement_of_line_graph():
    for h in atlas_roots(max_edges=9):
        k, cover = gamma_exact(h)
        assert cover.covers(h) and len(cover) == k
        g = co_line_graph(h)
        assert chromatic_number_exact(g)[0] == k
        col = cover_to_coloring(h, cover, g, h.sorted_edges)
        assert col.is_proper(g) and col.num_colors <= k


def test_cover_to_coloring_rejects_bad_input():
    h = cycle_graph(5)
    g = co_line_graph(h)
    partial = StarTriangleCover((CoverElement.star(h, 0),))
    with pytest.raises(ValueError):
        cover_to_coloring(h, partial, g, h.sorted_edges)
    _, cover = gamma_exact(h)
    with pytest.raises(ValueError):
        cover_to_coloring(h, cover, g, h.sorted_edges[:-1])


def test_cover_element_invariants():
    with pytest.raises(AssertionError):
        CoverElement("star", frozenset({(0, 1), (2, 3)}), 0)
    with pytest.raises(AssertionError):
        CoverElement("triangle", frozenset({(0, 1), (1, 2)}))
    with pytest.raises(ValueError):
        CoverElement("path", frozenset())


def test_cm_cover_attains_matching_number():
    for h in atlas_roots():
        if matching_number(h) > 3:
            with pytest.raises(ValueError):
                cm_cover(h)
            continue
        for prefer in (False, True):
            cm = cm_cover(h, prefer)
            assert cm.value == matching_number(h) and cm.covers(h)
            for p in cm.fc_pieces:
                sub, _ = h.induced(p)
                assert is_two_connected(sub) and is_factor_critical(sub)


def test_spanning_c5_on_all_5_vertex_pieces():
    found = 0
    for f in all_graphs(5):
        if f.n == 5 and is_two_connected(f) and is_factor_critical(f):
            c = spanning_c5(f)
            assert sorted(c) == [0, 1, 2, 3, 4]
            assert all(f.has_edge(c[i], c[(i + 1) % 5]) for i in range(5))
            found += 1
    assert found > 5
    with pytest.raises(ValueError):
        spanning_c5(complete_graph(4))


def test_structured_cover_exercises_every_degree_case(monkeypatch):
    seen = Counter()
    orig = coloring._degree_case_cover

    def spy(h, cycle, u, v):
        seen[len(h.adj[v])] += 1
        return orig(h, cycle, u, v)

    monkeypatch.setattr(coloring, "_degree_case_cover", spy)
    for h in valid_roots():
        for prefer in (False, True):
            cover = structured_cover(h, prefer)
            assert cover.covers(h) and len(cover) <= 3
    assert set(seen) == {1, 2, 3, 4}


def test_pendant_leaves_outside_the_piece():
    # C5 0-2-3-6-5 plus two pendant edges at 0; several vertices lie outside the piece
    h = Graph(7, [(0, 1), (0, 2), (0, 4), (0, 5), (2, 3), (3, 6), (5, 6)])
    assert h_perfect_root(h)[0] and matching_number(h) == 3
    cover = structured_cover(h, prefer_pieces=True)
    assert cover.covers(h) and len(cover) == 3
    g = co_line_graph(h)
    col = three_color_structured(g)
    assert col.is_proper(g) and col.num_colors == 3


def test_three_color_structured():
    for h in valid_roots():
        g = co_line_graph(h)
        col = three_color_structured(g)
        assert col.is_proper(g) and col.num_colors <= 3
        assert col.num_colors == chromatic_number_exact(g)[0]


def test_three_color_preconditions():
    with pytest.raises(PreconditionError) as e:
        three_color_structured(co_line_graph(wheel_graph(5)))
    wit = e.value.witness
    assert isinstance(wit, ForbiddenInduced) and wit.name == "co-L(W5)" and len(wit.vertices) == 10
    with pytest.raises(PreconditionError) as e:
        three_color_structured(decode_graph6("HErb`yi"))
    assert e.value.witness.name == "co-L(Pi)"
    with pytest.raises(PreconditionError) as e:
        three_color_structured(co_line_graph(cycle_graph(7)))
    assert isinstance(e.value.witness, LongOddCircuit)
    with pytest.raises(PreconditionError):
        three_color_structured(complement(Graph(4, [(0, 1), (0, 2), (0, 3)])))


def test_forbidden_witness_induces_the_pattern():
    # W5 plus a rim chord is still t-perfect and contains both patterns
    g = co_line_graph(Graph(6, list(wheel_graph(5).edges) + [(0, 2)]))
    with pytest.raises(PreconditionError) as e:
        three_color_structured(g)
    wit = e.value.witness
    sub, _ = g.induced(wit.vertices)
    pattern = {"co-L(Pi)": prism_graph(), "co-L(W5)": wheel_graph(5)}[wit.name]
    assert is_isomorphic(sub, co_line_graph(pattern)) is not None


def test_four_color():
    for h in atlas_roots():
        if matching_number(h) > 3 or not check_root_conditions(h)[0]:
            continue
        g = co_line_graph(h)
        col = four_color_col(g)
        assert col.is_proper(g) and col.num_colors <= 4
    for g6 in ("HErb`yi", "I?Becw}Yo"):
        g = decode_graph6(g6)
        col = four_color_col(g)
        assert col.is_proper(g) and col.num_colors == 4
    with pytest.raises(PreconditionError):
        four_color_col(co_line_graph(cycle_graph(7)))


def test_stable_set_hitting_max_cliques():
    for h in atlas_roots():
        if not h_perfect_root(h)[0]:
            continue
        g = co_line_graph(h)
        if len(max_cliques_by_size(g)[0]) < 3:
            with pytest.raises(PreconditionError):
                stable_set_hitting_max_cliques(g)
            continue
        s = stable_set_hitting_max_cliques(g)
        assert all(not g.has_edge(a, b) for a, b in combinations(s, 2))
        assert all(set(k) & set(s) for k in max_cliques_by_size(g))


def test_ceil_chif_coloring():
    g = co_line_graph(disjoint_union(*[complete_graph(3)] * 4))
    col = ceil_chif_coloring(g)
    assert col.is_proper(g) and col.num_colors == 4
    for h in atlas_roots():
        if not h_perfect_root(h)[0]:
            continue
        if find_subgraph(h, prism_graph()) or find_subgraph(h, wheel_graph(5)):
            continue
        g = co_line_graph(h)
        col = ceil_chif_coloring(g)
        assert col.is_proper(g)
        assert col.num_colors == ceil(fractional_chromatic_hperfect(g)) == chromatic_number_exact(g)[0]
    with pytest.raises(PreconditionError):
        ceil_chif_coloring(co_line_graph(cycle_graph(7)))
