"""h- and t-perfection of complements of line graphs.

For a root graph ``H``, the complement of ``L(H)`` is h-perfect iff every odd
circuit of ``H`` has length at most 5 and every edge of ``H`` has an end on
every 5-circuit.  t-perfection adds K4-freeness, i.e. ``nu(H) <= 3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graphs import (
    DEFAULT_CYCLE_CAP, CycleLimitError, Edge, Graph, Root, complement, iter_simple_cycles,
    max_matching, root_graph,
)


@dataclass(frozen=True)
class LongOddCircuit:
    """An odd circuit of the root of length at least 7."""

    cycle: tuple[int, ...]

    def check(self, h: Graph) -> bool:
        c = self.cycle
        return (len(c) % 2 == 1 and len(c) >= 7 and len(set(c)) == len(c)
                and all(h.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))))


@dataclass(frozen=True)
class EdgeMissingC5:
    """An edge of the root with no end on a 5-circuit."""

    edge: Edge
    cycle: tuple[int, ...]

    def check(self, h: Graph) -> bool:
        c = self.cycle
        return (len(c) == 5 and len(set(c)) == 5 and h.has_edge(*self.edge)
                and all(h.has_edge(c[i], c[(i + 1) % 5]) for i in range(5))
                and not set(self.edge) & set(c))


@dataclass(frozen=True)
class K4Witness:
    """Four vertices of the co-line graph inducing K4 (a 4-matching of the root)."""

    vertices: tuple[int, ...]

    def check(self, g: Graph) -> bool:
        vs = self.vertices
        return len(set(vs)) == 4 and all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


Witness = Union[LongOddCircuit, EdgeMissingC5, K4Witness]


@dataclass
class RecognitionReport:
    is_complement_of_line_graph: bool
    root: Root | None = None
    h_perfect: bool | None = None
    t_perfect: bool | None = None
    witness: Witness | None = None


def _missing_edge(h: Graph, cycle) -> Edge | None:
    on = set(cycle)
    for e in h.sorted_edges:
        if e[0] not in on and e[1] not in on:
            return e
    return None


def check_root_conditions(h: Graph, cap: int = DEFAULT_CYCLE_CAP) -> tuple[bool, Witness | None]:
    """Test both conditions on ``h`` directly from the full list of odd circuits."""
    count = 0
    five = []
    for c in iter_simple_cycles(h, parity=1):
        count += 1
        if count > cap:
            raise CycleLimitError(f"more than {cap} odd cycles")
        if len(c) >= 7:
            return False, LongOddCircuit(tuple(c))
        if len(c) == 5:
            five.append(c)
    for c in five:
        e = _missing_edge(h, c)
        if e is not None:
            return False, EdgeMissingC5(e, tuple(c))
    return True, None


def h_perfect_root(h: Graph) -> tuple[bool, Witness | None]:
    """The staged test on a root graph.

    1. look for any odd circuit of length >= 5; none means h-perfect;
    2. one of length >= 7 refutes;
    3. otherwise a 5-circuit exists: test the edge condition on all 5-circuits;
    4. if it holds no circuit is longer than 10, so searching circuits of
       length at most 9 for a 7- or 9-circuit settles the rest.
    """
    first = None
    for c in iter_simple_cycles(h, parity=1):
        if len(c) >= 5:
            first = c
            break
    if first is None:
        return True, None
    if len(first) >= 7:
        return False, LongOddCircuit(tuple(first))
    for c in iter_simple_cycles(h, max_len=5, min_len=5):
        e = _missing_edge(h, c)
        if e is not None:
            return False, EdgeMissingC5(e, tuple(c))
    for c in iter_simple_cycles(h, max_len=9, min_len=7, parity=1):
        return False, LongOddCircuit(tuple(c))
    return True, None


def h_perfect_col(g: Graph) -> RecognitionReport:
    """Decide h-perfection of ``g`` when its complement is a line graph."""
    root = root_graph(complement(g))
    if root is None:
        return RecognitionReport(False)
    ok, wit = h_perfect_root(root.h)
    return RecognitionReport(True, root, ok, None, wit)


def t_perfect_col(g: Graph) -> RecognitionReport:
    """h-perfection plus K4-freeness, with a K4 witness when that fails."""
    rep = h_perfect_col(g)
    if not rep.is_complement_of_line_graph:
        return rep
    if not rep.h_perfect:
        rep.t_perfect = False
        return rep
    m = max_matching(rep.root.h)
    if len(m) >= 4:
        index = rep.root.vertex_of()
        rep.t_perfect = False
        rep.witness = K4Witness(tuple(sorted(index[e] for e in m[:4])))
    else:
        rep.t_perfect = True
    return rep
