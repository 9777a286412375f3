"""Maximum matchings, factor-criticality and odd ear decompositions.

Matchings are found by exhaustive branch-and-bound over bitmasks, which is
plenty for the graphs handled here (a few dozen vertices at most).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import Edge, Graph, bits, _norm
from .structure import is_two_connected, iter_simple_cycles


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _max_matching(masks: tuple[int, ...], alive: int) -> tuple[Edge, ...]:
    best: list[Edge] = []
    current: list[Edge] = []

    def go(alive: int) -> None:
        nonlocal best
        # drop vertices without a live neighbour
        live = 0
        rest = alive
        while rest:
            low = rest & -rest
            rest ^= low
            if masks[low.bit_length() - 1] & alive:
                live |= low
        if len(current) + _popcount(live) // 2 <= len(best):
            return
        if not live:
            best = list(current)
            return
        low = live & -live
        v = low.bit_length() - 1
        nbrs = masks[v] & live
        while nbrs:
            nl = nbrs & -nbrs
            u = nl.bit_length() - 1
            nbrs ^= nl
            current.append(_norm(v, u))
            go(live & ~low & ~nl)
            current.pop()
        go(live & ~low)

    go(alive)
    return tuple(sorted(best))


def max_matching(g: Graph) -> tuple[Edge, ...]:
    """A maximum-cardinality matching as a sorted tuple of edges."""
    return _max_matching(g.masks, (1 << g.n) - 1)


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


def iter_maximum_matchings(g: Graph) -> Iterator[tuple[Edge, ...]]:
    """Every matching of maximum cardinality (brute force)."""
    target = matching_number(g)
    es = g.sorted_edges

    def go(i: int, used: int, chosen: list[Edge]) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == target:
            yield tuple(chosen)
            return
        if len(chosen) + (len(es) - i) < target:
            return
        for j in range(i, len(es)):
            u, v = es[j]
            if used >> u & 1 or used >> v & 1:
                continue
            chosen.append(es[j])
            yield from go(j + 1, used | 1 << u | 1 << v, chosen)
            chosen.pop()

    yield from go(0, 0, [])


def has_perfect_matching(g: Graph, alive: int | None = None) -> bool:
    if alive is None:
        alive = (1 << g.n) - 1
    return _has_pm(g.masks, alive)


@lru_cache(maxsize=1 << 16)
def _has_pm(masks: tuple[int, ...], alive: int) -> bool:
    if not alive:
        return True
    if _popcount(alive) % 2:
        return False
    low = alive & -alive
    v = low.bit_length() - 1
    nbrs = masks[v] & alive
    while nbrs:
        nl = nbrs & -nbrs
        nbrs ^= nl
        if _has_pm(masks, alive & ~low & ~nl):
            return True
    return False


def is_factor_critical(g: Graph) -> bool:
    """True iff ``g - v`` has a perfect matching for every vertex ``v``."""
    if g.n % 2 == 0:
        return False
    full = (1 << g.n) - 1
    return all(_has_pm(g.masks, full & ~(1 << v)) for v in range(g.n))


@dataclass(frozen=True)
class EarDecomposition:
    """First ear is an odd circuit (closed vertex sequence, start not repeated);
    later ears are odd paths whose two ends lie in the earlier ears."""

    ears: tuple[tuple[int, ...], ...]

    def edges(self) -> set[Edge]:
        out: set[Edge] = set()
        first, *rest = self.ears
        out.update(_norm(first[i], first[(i + 1) % len(first)]) for i in range(len(first)))
        for ear in rest:
            out.update(_norm(a, b) for a, b in zip(ear, ear[1:]))
        return out

    def validate(self, g: Graph) -> None:
        """Raise AssertionError unless this is an odd ear decomposition of ``g``."""
        first, *rest = self.ears
        assert len(first) % 2 == 1 and len(first) >= 3 and len(set(first)) == len(first)
        for i in range(len(first)):
            assert g.has_edge(first[i], first[(i + 1) % len(first)])
        seen = set(first)
        covered = {_norm(first[i], first[(i + 1) % len(first)]) for i in range(len(first))}
        for ear in rest:
            assert (len(ear) - 1) % 2 == 1, f"ear {ear} has even length"
            assert ear[0] != ear[-1] and ear[0] in seen and ear[-1] in seen
            inner = ear[1:-1]
            assert not (set(inner) & seen) and len(set(inner)) == len(inner)
            for a, b in zip(ear, ear[1:]):
                e = _norm(a, b)
                assert g.has_edge(a, b) and e not in covered
                covered.add(e)
            seen.update(inner)
        assert seen == set(range(g.n)) and covered == set(g.edges)


def _odd_ears(g: Graph, inside: int) -> Iterator[tuple[int, ...]]:
    # odd paths of length >= 3 between distinct vertices of `inside`, interior outside it
    masks = g.masks
    for s in bits(inside):
        path = [s]

        def walk(v: int, used: int) -> Iterator[tuple[int, ...]]:
            for u in bits(masks[v]):
                if used >> u & 1:
                    continue
                if inside >> u & 1:
                    if len(path) >= 3 and len(path) % 2 == 1 and u > s:
                        yield tuple(path + [u])
                    continue
                path.append(u)
                yield from walk(u, used | 1 << u)
                path.pop()

        for u in bits(masks[s] & ~inside):
            path.append(u)
            yield from walk(u, (1 << s) | (1 << u))
            path.pop()


def odd_ear_decomposition(g: Graph) -> EarDecomposition | None:
    """An open odd ear decomposition of ``g`` if it is 2-connected and factor-critical.

    Start circuits are tried shortest first; chords are added as single-edge
    ears as soon as both ends are present; longer ears are found by
    backtracking.
    """
    if not is_two_connected(g) or not is_factor_critical(g):
        return None
    starts = sorted(iter_simple_cycles(g, parity=1), key=lambda c: (len(c), c))
    all_edges = set(g.edges)
    full = (1 << g.n) - 1

    def solve(ears: list[tuple[int, ...]], inside: int, covered: set[Edge]) -> list[tuple[int, ...]] | None:
        added = []
        for e in sorted(all_edges - covered):
            if inside >> e[0] & 1 and inside >> e[1] & 1:
                added.append(e)
        ears = ears + added
        covered = covered | set(added)
        if inside == full:
            return ears if covered == all_edges else None
        for ear in _odd_ears(g, inside):
            new_edges = {_norm(a, b) for a, b in zip(ear, ear[1:])}
            got = solve(ears + [ear], inside | sum(1 << v for v in ear), covered | new_edges)
            if got is not None:
                return got
        return None

    for c in starts:
        cyc = tuple(c)
        cov = {_norm(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
        got = solve([cyc], sum(1 << v for v in cyc), cov)
        if got is not None:
            return EarDecomposition(tuple(got))
    return None  # pragma: no cover - excluded by Lovász's theorem
