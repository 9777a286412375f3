"""Cliques, stable sets, cycles, embeddings and contraction."""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterator

from .core import Graph, GuardError, bits, component_of

STABLE_SET_GUARD = 32
DEFAULT_CYCLE_CAP = 10**6


class CycleLimitError(RuntimeError):
    """More cycles than the configured cap; the input is too large to enumerate."""


# cliques and stable sets ----------------------------------------------------


def _subsets_within(masks: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    # every set S with S - v inside masks[v] for all v in S, ascending by first element
    out: list[tuple[int, ...]] = []

    def grow(current: tuple[int, ...], cand: int) -> None:
        out.append(current)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(current + (v,), cand & masks[v])

    full = (1 << n) - 1
    for v in range(n):
        grow((v,), masks[v] & (full ^ ((1 << (v + 1)) - 1)))
    return out


@lru_cache(maxsize=256)
def enumerate_cliques(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All nonempty cliques of ``g`` as sorted vertex tuples."""
    return tuple(_subsets_within(g.masks, g.n))


def max_cliques_by_size(g: Graph) -> list[tuple[int, ...]]:
    """Cliques of maximum cardinality."""
    cl = enumerate_cliques(g)
    if not cl:
        return []
    w = max(len(c) for c in cl)
    return [c for c in cl if len(c) == w]


def omega(g: Graph) -> int:
    """Clique number (0 for the empty graph)."""
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + bin(cand).count("1") <= best:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(size + 1, cand & g.masks[v])
            if size + 1 + bin(cand).count("1") <= best:
                return

    grow(0, (1 << g.n) - 1)
    return best


def find_clique(g: Graph, k: int) -> tuple[int, ...] | None:
    """Some clique with ``k`` vertices, or None."""
    if k == 0:
        return ()

    def grow(current: tuple[int, ...], cand: int) -> tuple[int, ...] | None:
        if len(current) == k:
            return current
        while cand:
            if len(current) + bin(cand).count("1") < k:
                return None
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            found = grow(current + (v,), cand & g.masks[v])
            if found:
                return found
        return None

    return grow((), (1 << g.n) - 1)


def enumerate_stable_sets(g: Graph) -> list[tuple[int, ...]]:
    """All stable sets including the empty one."""
    if g.n > STABLE_SET_GUARD:
        raise GuardError(f"stable set enumeration limited to n <= {STABLE_SET_GUARD}")
    full = (1 << g.n) - 1
    non_adj = tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.masks))
    return [()] + _subsets_within(non_adj, g.n)


def is_stable(g: Graph, vertices) -> bool:
    vs = list(vertices)
    mask = sum(1 << v for v in vs)
    return all(not (g.masks[v] & mask) for v in vs)


def is_clique(g: Graph, vertices) -> bool:
    vs = list(vertices)
    mask = sum(1 << v for v in vs)
    return all((g.masks[v] | (1 << v)) & mask == mask for v in vs)


# cycles -------------------------------------------------------------------


def shortest_odd_cycle(g: Graph) -> tuple[int, list[int]] | None:
    """A shortest odd circuit as ``(length, vertices in cyclic order)``.

    Breadth-first search in the bipartite double cover from every vertex;
    the shortest odd closed walk over all start vertices is a circuit.
    """
    best: tuple[int, list[int]] | None = None
    for s in range(g.n):
        parent: dict[tuple[int, int], tuple[int, int] | None] = {(s, 0): None}
        queue = deque([(s, 0)])
        dist = {(s, 0): 0}
        while queue:
            node = queue.popleft()
            if best is not None and dist[node] + 1 >= best[0]:
                break
            v, p = node
            for u in g.adj[v]:
                nxt = (u, 1 - p)
                if nxt not in dist:
                    dist[nxt] = dist[node] + 1
                    parent[nxt] = node
                    queue.append(nxt)
            if (s, 1) in dist:
                break
        if (s, 1) in dist and (best is None or dist[(s, 1)] < best[0]):
            walk = []
            node = (s, 1)
            while node is not None:
                walk.append(node[0])
                node = parent[node]
            walk.pop()  # drop the repeated start
            best = (len(walk), walk[::-1])
    if best is not None:
        assert len(set(best[1])) == best[0]
    return best


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def two_coloring(g: Graph) -> list[int] | None:
    """Proper 2-colouring as a colour list, or None if ``g`` has an odd cycle."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def iter_simple_cycles(g: Graph, max_len: int | None = None, min_len: int = 3,
                       parity: int | None = None) -> Iterator[list[int]]:
    """Yield every simple cycle once, as a vertex list starting at its minimum.

    Depth-first extension of paths whose vertices all exceed the start; the
    two traversal directions are identified by requiring ``cycle[1] < cycle[-1]``.
    ``parity`` (0 or 1) keeps only even or odd lengths.
    """
    limit = g.n if max_len is None else min(max_len, g.n)
    masks = g.masks
    for s in range(g.n):
        higher = ~((1 << (s + 1)) - 1)
        path = [s]
        start_nbrs = masks[s] & higher

        def extend(v: int, used: int) -> Iterator[list[int]]:
            k = len(path)
            if k >= min_len and k >= 3 and (start_nbrs >> v & 1) and path[1] < v:
                if parity is None or k % 2 == parity:
                    yield list(path)
            if k == limit:
                return
            cand = masks[v] & higher & ~used
            while cand:
                low = cand & -cand
                u = low.bit_length() - 1
                cand ^= low
                path.append(u)
                yield from extend(u, used | low)
                path.pop()

        yield from extend(s, 1 << s)


def enumerate_simple_cycles(g: Graph, max_len: int | None = None, cap: int = DEFAULT_CYCLE_CAP,
                            parity: int | None = None) -> list[list[int]]:
    """All simple cycles of length at most ``max_len``.

    Raises CycleLimitError once more than ``cap`` cycles have been produced.
    """
    out = []
    for c in iter_simple_cycles(g, max_len=max_len, parity=parity):
        out.append(c)
        if len(out) > cap:
            raise CycleLimitError(f"more than {cap} cycles; input too large to enumerate")
    return out


# embeddings ---------------------------------------------------------------


def _search_order(pattern: Graph) -> list[int]:
    # visit pattern vertices so that each (after the first of a component) has an earlier neighbour
    order: list[int] = []
    seen: set[int] = set()
    for s in sorted(range(pattern.n), key=lambda v: -pattern.degree(v)):
        if s in seen:
            continue
        seen.add(s)
        order.append(s)
        while True:
            best = max((u for v in order for u in pattern.adj[v] if u not in seen),
                       key=lambda u: (sum(1 for w in pattern.adj[u] if w in seen), pattern.degree(u), -u),
                       default=None)
            if best is None:
                break
            seen.add(best)
            order.append(best)
    return order


def _embed(g: Graph, pattern: Graph, induced: bool) -> dict[int, int] | None:
    if pattern.n > g.n or pattern.m > g.m:
        return None
    order = _search_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    # for each pattern vertex: earlier pattern vertices adjacent / non-adjacent to it
    earlier_adj = [[w for w in pattern.adj[v] if pos[w] < pos[v]] for v in order]
    earlier_non = [[w for w in order[:i] if w not in pattern.adj[v]] for i, v in enumerate(order)]
    pdeg = [pattern.degree(v) for v in order]
    gdeg = [g.degree(v) for v in range(g.n)]
    image: dict[int, int] = {}
    used = 0
    full = (1 << g.n) - 1

    def step(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        cand = full & ~used
        for w in earlier_adj[i]:
            cand &= g.masks[image[w]]
        if induced:
            for w in earlier_non[i]:
                cand &= ~g.masks[image[w]]
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            cand ^= low
            if gdeg[x] < pdeg[i]:
                continue
            image[v] = x
            used |= low
            if step(i + 1):
                return True
            used ^= low
            del image[v]
        return False

    return dict(image) if step(0) else None


def contains_induced(g: Graph, pattern: Graph) -> dict[int, int] | None:
    """Injective map from pattern vertices into ``g`` witnessing an induced copy, or None."""
    return _embed(g, pattern, induced=True)


def find_subgraph(g: Graph, pattern: Graph) -> dict[int, int] | None:
    """Injective map witnessing a (not necessarily induced) copy of ``pattern``."""
    return _embed(g, pattern, induced=False)


def is_isomorphic(g: Graph, h: Graph) -> dict[int, int] | None:
    """An isomorphism ``h -> g`` as a vertex map, or None."""
    if g.n != h.n or g.m != h.m or sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return None
    return _embed(g, h, induced=True)


# contraction --------------------------------------------------------------


def contract_stable_neighborhood(g: Graph, v: int) -> Graph:
    """Identify ``v`` and all its neighbours into one vertex.

    The merged vertex is placed last; the remaining vertices keep their
    relative order.  Loops and parallel edges are dropped.
    """
    nbrs = g.adj[v]
    if not is_stable(g, nbrs):
        raise ValueError(f"neighbourhood of {v} is not stable")
    merged = set(nbrs) | {v}
    rest = [u for u in range(g.n) if u not in merged]
    index = {u: i for i, u in enumerate(rest)}
    new = len(rest)
    es = set()
    for a, b in g.edges:
        ia = index.get(a, new)
        ib = index.get(b, new)
        if ia != ib:
            es.add((ia, ib))
    return Graph(new + 1, es)


def is_two_connected(g: Graph) -> bool:
    """At least 3 vertices, connected, and no cut vertex."""
    if g.n < 3 or not g.is_connected():
        return False
    full = (1 << g.n) - 1
    for v in range(g.n):
        rest = full & ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        if len(component_of(g, start, rest)) != g.n - 1:
            return False
    return True


__all__ = [
    "CycleLimitError", "enumerate_cliques", "max_cliques_by_size", "omega", "find_clique",
    "enumerate_stable_sets", "is_stable", "is_clique", "shortest_odd_cycle", "is_bipartite",
    "two_coloring", "iter_simple_cycles", "enumerate_simple_cycles", "contains_induced",
    "find_subgraph", "is_isomorphic", "contract_stable_neighborhood", "is_two_connected",
    "bits",
]
