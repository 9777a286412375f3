"""Recovering a simple root graph ``h`` with ``L(h) = g``.

A graph is the line graph of a simple graph iff its edges split into
cliques with every vertex in at most two of them (a Krausz partition).  The
cliques become root vertices; a vertex of ``g`` lying in only one clique gets
a private pendant root vertex, an isolated vertex gets two.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Edge, Graph, _norm, bits, line_graph


@dataclass(frozen=True)
class Root:
    """Root graph ``h`` and ``edge_of[i]``: the edge of ``h`` representing vertex ``i`` of ``g``."""

    h: Graph
    edge_of: tuple[Edge, ...]

    def vertex_of(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_of)}


def _krausz(g: Graph) -> list[int] | None:
    # backtracking over the clique containing the lowest uncovered edge
    n = g.n
    masks = g.masks
    count = [0] * n
    cliques: list[int] = []
    uncovered = [masks[v] for v in range(n)]  # uncovered-edge adjacency

    def ok_vertex(v: int) -> bool:
        if count[v] > 2:
            return False
        rest = uncovered[v]
        if not rest:
            return True
        if count[v] == 2:
            return False
        if count[v] == 1:
            # remaining neighbours must form one clique together with v
            for u in bits(rest):
                if (rest & ~(1 << u)) & ~uncovered[u]:
                    return False
        return True

    def pick() -> tuple[int, int] | None:
        for v in range(n):
            if uncovered[v]:
                u = (uncovered[v] & -uncovered[v]).bit_length() - 1
                return v, u
        return None

    def candidates(v: int, u: int) -> list[int]:
        # cliques K ⊇ {u, v} in the uncovered-edge graph; largest first
        common = uncovered[v] & uncovered[u]
        out = []

        def grow(k: int, cand: int) -> None:
            out.append(k)
            while cand:
                low = cand & -cand
                w = low.bit_length() - 1
                cand ^= low
                grow(k | low, cand & uncovered[w])

        grow((1 << v) | (1 << u), common)
        out.sort(key=lambda k: (-bin(k).count("1"), k))
        return out

    def solve() -> bool:
        nxt = pick()
        if nxt is None:
            return True
        v, u = nxt
        for k in candidates(v, u):
            members = bits(k)
            for a in members:
                count[a] += 1
                uncovered[a] &= ~k
            if all(ok_vertex(a) for a in members) and solve():
                cliques.append(k)
                return True
            for a in members:
                count[a] -= 1
                uncovered[a] |= k & ~(1 << a) & masks[a]
        return False

    if not solve():
        return None
    return cliques


def root_graph(g: Graph) -> Root | None:
    """A simple graph whose line graph is ``g``, or None if there is none.

    On ``K3`` either ``K3`` or ``K_{1,3}`` may come back; any valid root is
    returned and the correspondence is checked before returning.
    """
    cliques = _krausz(g)
    if cliques is None:
        return None
    cliques.sort()
    ends: list[list[int]] = [[] for _ in range(g.n)]
    for idx, k in enumerate(cliques):
        for v in bits(k):
            ends[v].append(idx)
    nxt = len(cliques)
    for v in range(g.n):
        while len(ends[v]) < 2:
            ends[v].append(nxt)
            nxt += 1
    edge_of = tuple(_norm(a, b) for a, b in ends)
    h = Graph(nxt, edge_of)
    if len(set(edge_of)) != g.n:  # pragma: no cover - would need a multigraph root
        return None
    root = Root(h, edge_of)
    check_root(g, root)
    return root


def check_root(g: Graph, root: Root) -> None:
    """Assert that ``root.edge_of`` is an isomorphism from ``g`` onto ``L(root.h)``."""
    lg, es = line_graph(root.h)
    index = {e: i for i, e in enumerate(es)}
    perm = [index[e] for e in root.edge_of]
    assert sorted(perm) == list(range(g.n))
    assert g.relabel(perm) == lg, "root does not reproduce the line graph"
