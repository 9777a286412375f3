"""Exact colouring by DSATUR-ordered branch and bound."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, GuardError
from .structure import find_clique, omega

COLOR_GUARD = 24


def _check_guard(g: Graph) -> None:
    if g.n > COLOR_GUARD:
        raise GuardError(f"exact colouring limited to n <= {COLOR_GUARD}")


def is_proper(g: Graph, colors) -> bool:
    return len(colors) == g.n and all(colors[u] != colors[v] for u, v in g.edges)


def is_k_colorable(g: Graph, k: int) -> list[int] | None:
    """A proper colouring with colours ``0..k-1``, or None.

    Vertices are chosen by saturation degree (ties: degree, then lowest
    index), and a new colour is only opened one at a time, so the search is
    deterministic and symmetric colourings are not revisited.
    """
    _check_guard(g)
    if g.n == 0:
        return []
    if k <= 0:
        return None
    colors = [-1] * g.n
    # seed a clique with distinct colours to break symmetry
    q = omega(g)
    if q > k:
        return None
    seed = find_clique(g, q) or ()
    for i, v in enumerate(seed):
        colors[v] = i
    adj = g.adj

    def choose() -> int:
        best, key = -1, None
        for v in range(g.n):
            if colors[v] >= 0:
                continue
            sat = len({colors[u] for u in adj[v] if colors[u] >= 0})
            kk = (sat, len(adj[v]), -v)
            if key is None or kk > key:
                best, key = v, kk
        return best

    def solve(used: int, left: int) -> bool:
        if left == 0:
            return True
        v = choose()
        forbidden = {colors[u] for u in adj[v]}
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colors[v] = c
            if solve(max(used, c + 1), left - 1):
                return True
            colors[v] = -1
        return False

    if solve(len(seed), g.n - len(seed)):
        return colors
    return None


def chromatic_number_exact(g: Graph) -> tuple[int, list[int]]:
    """``(chi(g), colouring)`` by trying ``k = omega, omega+1, ...``."""
    _check_guard(g)
    if g.n == 0:
        return 0, []
    k = max(omega(g), 1)
    while True:
        col = is_k_colorable(g, k)
        if col is not None:
            return k, col
        k += 1


@dataclass(frozen=True)
class CriticalityReport:
    critical: bool
    three_colorable: bool
    # vertex -> 3-colouring of g - v (indexed by the remaining vertices in order)
    witnesses: dict[int, list[int]]
    failed_vertex: int | None = None


def is_4_critical(g: Graph) -> CriticalityReport:
    """Not 3-colourable while every vertex-deleted subgraph is."""
    _check_guard(g)
    if is_k_colorable(g, 3) is not None:
        return CriticalityReport(False, True, {})
    witnesses = {}
    for v in range(g.n):
        sub, _ = g.delete_vertex(v)
        col = is_k_colorable(sub, 3)
        if col is None:
            return CriticalityReport(False, False, witnesses, failed_vertex=v)
        witnesses[v] = col
    return CriticalityReport(True, False, witnesses)
