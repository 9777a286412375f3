from functools import lru_cache
from pathlib import Path

import networkx as nx
import pytest

from tperfect.graph6 import decode_graph6
from tperfect.graphs import Graph

DATA = Path(__file__).parent / "data"

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@lru_cache(maxsize=None)
def all_graphs(max_n: int = 8) -> tuple[Graph, ...]:
    """Every graph on at most ``max_n`` vertices up to isomorphism (frozen list)."""
    out = []
    with open(DATA / "graphs_upto8.g6") as f:
        for line in f:
            g = decode_graph6(line)
            if g.n <= max_n:
                out.append(g)
    return tuple(out)


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def from_nx(G: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph(len(idx), [(idx[u], idx[v]) for u, v in G.edges()])


def atlas_roots(max_edges: int | None = None, no_isolated: bool = True):
    """Graphs from the networkx atlas (up to 7 vertices), optionally without isolated vertices."""
    for G in nx.graph_atlas_g()[1:]:
        if no_isolated and any(d == 0 for _, d in G.degree()):
            continue
        if max_edges is not None and G.number_of_edges() > max_edges:
            continue
        yield from_nx(G)


@pytest.fixture(scope="session")
def small_graphs():
    return all_graphs(6)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {msg}")
