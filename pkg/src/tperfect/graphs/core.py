"""Simple undirected graphs on vertices ``0..n-1`` and a few named families."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GuardError(ValueError):
    """Input is too large for an exhaustive routine."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``.  Construction accepts
    pairs in either order and rejects loops and out-of-range endpoints.
    """

    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        es = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            es.add(_norm(u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency bitmask per vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(m)) for m in self.masks)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def full_star(self, v: int) -> frozenset[Edge]:
        """All edges incident to ``v``."""
        return frozenset(_norm(v, u) for u in self.adj[v])

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph, relabelled densely; returns it with the old labels."""
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        es = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), es), keep

    def delete_vertex(self, v: int) -> tuple["Graph", tuple[int, ...]]:
        return self.induced(u for u in range(self.n) if u != v)

    def edge_subgraph(self, edges: Iterable[Edge]) -> "Graph":
        """Same vertex set, only the given edges."""
        return Graph(self.n, edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(component_of(self, 0)) == self.n

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    return _bits(mask)


def component_of(g: Graph, v: int, allowed: int | None = None) -> set[int]:
    if allowed is None:
        allowed = (1 << g.n) - 1
    seen = 1 << v
    stack = [v]
    while stack:
        u = stack.pop()
        new = g.masks[u] & allowed & ~seen
        seen |= new
        stack.extend(_bits(new))
    return set(_bits(seen))


def connected_components(g: Graph) -> list[list[int]]:
    left = set(range(g.n))
    comps = []
    while left:
        c = component_of(g, min(left))
        comps.append(sorted(c))
        left -= c
    return comps


def complement(g: Graph) -> Graph:
    return Graph(g.n, (e for e in combinations(range(g.n), 2) if e not in g.edges))


def line_graph(h: Graph) -> tuple[Graph, tuple[Edge, ...]]:
    """Line graph of ``h`` and the map from its vertices to edges of ``h``.

    Vertex ``i`` of the result stands for ``h.sorted_edges[i]``.
    """
    es = h.sorted_edges
    out = []
    for i, j in combinations(range(len(es)), 2):
        if set(es[i]) & set(es[j]):
            out.append((i, j))
    return Graph(len(es), out), es


def co_line_graph(h: Graph) -> Graph:
    """Complement of the line graph of ``h``."""
    return complement(line_graph(h)[0])


def disjoint_union(*graphs: Graph) -> Graph:
    es, off = [], 0
    for g in graphs:
        es.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(off, es)


# named families ---------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def cycle_power(n: int, k: int) -> Graph:
    """``C_n^k``: vertices at cyclic distance at most ``k`` are adjacent."""
    return Graph(n, ((i, (i + d) % n) for i in range(n) for d in range(1, k + 1) if (i + d) % n != i))


def wheel_graph(k: int) -> Graph:
    """``W_k``: rim cycle on ``0..k-1`` plus hub ``k``."""
    rim = cycle_graph(k)
    return Graph(k + 1, list(rim.edges) + [(i, k) for i in range(k)])


def star_graph(k: int) -> Graph:
    """``K_{1,k}`` with center 0."""
    return Graph(k + 1, ((0, i) for i in range(1, k + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def prism_graph() -> Graph:
    """Two triangles 0-1-2 and 3-4-5 joined by the matching i -- i+3."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def mycielski_grotzsch() -> Graph:
    """Grötzsch graph: apex 0, its neighbours 1..5, outer 5-cycle 6..10.

    Outer vertex ``6+i`` is adjacent to ``6+i±1`` and to the neighbours
    ``1+(i±1 mod 5)`` of the apex.
    """
    es = [(0, i) for i in range(1, 6)]
    for i in range(5):
        es.append((6 + i, 6 + (i + 1) % 5))
        es.append((1 + i, 6 + (i + 1) % 5))
        es.append((1 + i, 6 + (i - 1) % 5))
    return Graph(11, es)
