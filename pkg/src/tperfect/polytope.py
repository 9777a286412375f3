"""Exact description of HSTAB(G) and vertex certificates.

HSTAB(G) is cut out by ``x >= 0``, ``x(K) <= 1`` for every clique ``K`` and
``x(C) <= (|C|-1)/2`` for every odd circuit ``C``.  A point is certified to
be a vertex when it satisfies all of them and the tight rows have rank
``n``.  Everything here is exact: ``fractions.Fraction`` for points and
fraction-free integer elimination for ranks.

Odd-circuit constraints are handled without listing all circuits when a
point is tested.  Put ``w(uv) = 1 - x_u - x_v`` on each edge; once the edge
(clique) constraints hold, ``w >= 0`` and for an odd circuit ``C`` the slack
of its constraint is ``(w(C) - 1) / 2``.  So the point is feasible iff every
odd closed walk has ``w``-length at least 1 (shortest paths in the
bipartite double cover), and the tight circuits are exactly the odd
circuits of ``w``-length 1, which a pruned depth-first search lists.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import (
    DEFAULT_CYCLE_CAP, Graph, enumerate_cliques, enumerate_simple_cycles, omega,
    shortest_odd_cycle,
)

NONNEG = "non-negativity"
CLIQUE = "clique"
ODD_CIRCUIT = "odd-circuit"


# rational text format -----------------------------------------------------


def parse_rational(text: str) -> Fraction:
    """``"p/q"`` or ``"p"`` with optional sign."""
    t = text.strip()
    if not t or not all(c in "+-0123456789/" for c in t) or t.count("/") > 1:
        raise ValueError(f"not a rational: {text!r}")
    value = Fraction(t)
    return value


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """Comma-separated rationals, optionally wrapped in brackets."""
    t = text.strip()
    if t.startswith("[") and t.endswith("]"):
        t = t[1:-1]
    if not t.strip():
        return ()
    return tuple(parse_rational(p) for p in t.split(","))


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_vector(x: Sequence[Fraction]) -> str:
    return ",".join(format_rational(v) for v in x)


# constraints --------------------------------------------------------------


@dataclass(frozen=True)
class Constraint:
    """One inequality ``row . x <= rhs`` of HSTAB.

    ``vertices`` is the support: the single vertex for non-negativity, the
    clique, or the circuit in cyclic order.
    """

    kind: str
    vertices: tuple[int, ...]
    row: tuple[int, ...]
    rhs: Fraction

    def lhs(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.row, x) if c), Fraction(0))

    def slack(self, x: Sequence[Fraction]) -> Fraction:
        return self.rhs - self.lhs(x)

    def describe(self) -> str:
        vs = ",".join(map(str, self.vertices))
        if self.kind == NONNEG:
            return f"x{vs} >= 0"
        return f"{self.kind}[{vs}] <= {format_rational(self.rhs)}"


def nonneg_constraint(n: int, v: int) -> Constraint:
    row = [0] * n
    row[v] = -1
    return Constraint(NONNEG, (v,), tuple(row), Fraction(0))


def clique_constraint(n: int, clique: Iterable[int]) -> Constraint:
    vs = tuple(sorted(clique))
    row = [0] * n
    for v in vs:
        row[v] = 1
    return Constraint(CLIQUE, vs, tuple(row), Fraction(1))


def odd_circuit_constraint(n: int, cycle: Sequence[int]) -> Constraint:
    if len(cycle) % 2 == 0 or len(cycle) < 3:
        raise ValueError("odd circuit constraint needs an odd cycle")
    row = [0] * n
    for v in cycle:
        row[v] = 1
    return Constraint(ODD_CIRCUIT, tuple(cycle), tuple(row), Fraction(len(cycle) - 1, 2))


def generate_constraints(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[Constraint]:
    """Every non-negativity, clique and odd-circuit constraint of ``g``.

    Odd circuits come from full cycle enumeration, so this raises
    ``CycleLimitError`` on graphs with more than ``cap`` odd cycles.
    """
    out = [nonneg_constraint(g.n, v) for v in range(g.n)]
    out += [clique_constraint(g.n, k) for k in enumerate_cliques(g)]
    out += [odd_circuit_constraint(g.n, c) for c in enumerate_simple_cycles(g, cap=cap, parity=1)]
    return out


# exact rank ---------------------------------------------------------------


def _integer_row(row: Sequence) -> list[int]:
    if all(type(v) is int for v in row):
        return list(row)
    fr = [Fraction(v) for v in row]
    d = math.lcm(*(v.denominator for v in fr)) if fr else 1
    return [int(v * d) for v in fr]


def rational_rank(rows: Iterable[Sequence]) -> int:
    """Rank over the rationals by Bareiss fraction-free elimination."""
    mat = [list(r) for r in dict.fromkeys(tuple(_integer_row(r)) for r in rows)]
    if not mat:
        return 0
    width = len(mat[0])
    if any(len(r) != width for r in mat):
        raise ValueError("rows have different lengths")
    rank = 0
    prev = 1
    for col in range(width):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank]
        for i in range(rank + 1, len(mat)):
            r = mat[i]
            a = r[col]
            mat[i] = [(p[col] * r[j] - a * p[j]) // prev for j in range(width)]
        prev = p[col]
        rank += 1
        if rank == len(mat):
            break
    return rank


# membership ---------------------------------------------------------------


def _check_dim(g: Graph, x: Sequence) -> tuple[Fraction, ...]:
    if len(x) != g.n:
        raise ValueError(f"point has {len(x)} coordinates, graph has {g.n} vertices")
    return tuple(Fraction(v) for v in x)


def _scaled_weights(g: Graph, x: Sequence[Fraction]) -> tuple[int, dict[tuple[int, int], int]]:
    # D * (1 - x_u - x_v) per edge, D the common denominator; nonnegative once edges are feasible
    d = math.lcm(*(v.denominator for v in x)) if x else 1
    xs = [int(v * d) for v in x]
    return d, {(u, v): d - xs[u] - xs[v] for u, v in g.edges}


def _split_odd(walk: list[int]) -> list[int]:
    # reduce an odd closed walk to an odd circuit on a subset of its steps
    while True:
        first: dict[int, int] = {}
        for i, v in enumerate(walk):
            if v in first:
                j = first[v]
                inner = walk[j:i]
                outer = walk[i:] + walk[:j]
                walk = inner if len(inner) % 2 else outer
                break
            first[v] = i
        else:
            return walk


def lightest_odd_circuit(g: Graph, x: Sequence[Fraction]) -> tuple[Fraction, list[int]] | None:
    """Odd circuit minimising ``sum over its edges of (1 - x_u - x_v)``.

    Requires every edge weight to be nonnegative.  Returns ``(weight, circuit)``
    or None when ``g`` is bipartite.
    """
    x = _check_dim(g, x)
    d, w = _scaled_weights(g, x)
    if any(c < 0 for c in w.values()):
        raise ValueError("edge constraints violated; odd-circuit weights would be negative")
    wt = {}
    for (u, v), c in w.items():
        wt[u, v] = wt[v, u] = c
    best: tuple[int, list[int]] | None = None
    for s in range(g.n):
        dist = {(s, 0): 0}
        parent: dict[tuple[int, int], tuple[int, int]] = {}
        heap = [(0, s, 0)]
        done = set()
        while heap:
            dd, v, p = heapq.heappop(heap)
            if (v, p) in done:
                continue
            done.add((v, p))
            if (v, p) == (s, 1) or (best is not None and dd >= best[0]):
                break
            for u in g.adj[v]:
                nd = dd + wt[v, u]
                key = (u, 1 - p)
                if nd < dist.get(key, nd + 1):
                    dist[key] = nd
                    parent[key] = (v, p)
                    heapq.heappush(heap, (nd, u, 1 - p))
        if (s, 1) in done and (best is None or dist[(s, 1)] < best[0]):
            walk = []
            node = (s, 1)
            while node != (s, 0):
                walk.append(node[0])
                node = parent[node]
            walk.reverse()
            best = (dist[(s, 1)], walk)
    if best is None:
        return None
    cyc = _split_odd(best[1])
    total = sum(wt[cyc[i], cyc[(i + 1) % len(cyc)]] for i in range(len(cyc)))
    return Fraction(total, d), cyc


def _scaled(x: Sequence[Fraction]) -> tuple[int, list[int]]:
    d = math.lcm(*(v.denominator for v in x)) if x else 1
    return d, [int(v * d) for v in x]


def hstab_membership(g: Graph, x: Sequence) -> tuple[bool, Constraint | None]:
    """Whether ``x`` lies in HSTAB(g); on failure one violated constraint."""
    x = _check_dim(g, x)
    for v in range(g.n):
        if x[v] < 0:
            return False, nonneg_constraint(g.n, v)
    d, xs = _scaled(x)
    for k in enumerate_cliques(g):
        if sum(xs[v] for v in k) > d:
            return False, clique_constraint(g.n, k)
    light = lightest_odd_circuit(g, x)
    if light is not None and light[0] < 1:
        return False, odd_circuit_constraint(g.n, light[1])
    return True, None


def _tight_odd_circuits(g: Graph, x: Sequence[Fraction]) -> list[list[int]]:
    # odd circuits whose edge weights sum to exactly D (i.e. to 1 before scaling)
    d, w = _scaled_weights(g, x)
    wt: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for (u, v), c in w.items():
        wt[u][v] = c
        wt[v][u] = c
    out = []
    for s in range(g.n):
        path = [s]

        def dfs(v: int, used: int, acc: int) -> None:
            for u, c in wt[v].items():
                if u == s and len(path) >= 3 and len(path) % 2 == 1 and path[1] < v:
                    if acc + c == d:
                        out.append(list(path))
                    continue
                if u <= s or used >> u & 1 or acc + c > d:
                    continue
                path.append(u)
                dfs(u, used | 1 << u, acc + c)
                path.pop()

        dfs(s, 1 << s, 0)
    out.sort(key=lambda c: (len(c), c))
    return out


def tight_constraints(g: Graph, x: Sequence) -> list[Constraint]:
    """Constraints of HSTAB(g) satisfied with equality at ``x`` (a member)."""
    x = _check_dim(g, x)
    ok, bad = hstab_membership(g, x)
    if not ok:
        raise ValueError(f"point is not in HSTAB; violates {bad.describe()}")
    return _tight(g, x)


def _tight(g: Graph, x: tuple[Fraction, ...]) -> list[Constraint]:
    d, xs = _scaled(x)
    out = [nonneg_constraint(g.n, v) for v in range(g.n) if xs[v] == 0]
    out += [clique_constraint(g.n, k) for k in enumerate_cliques(g) if sum(xs[v] for v in k) == d]
    out += [odd_circuit_constraint(g.n, c) for c in _tight_odd_circuits(g, x)]
    return out


@dataclass
class VertexReport:
    member: bool
    non_integral: bool
    tight_constraints: list[Constraint] = field(default_factory=list)
    rank: int = 0
    is_vertex: bool = False
    violated: Constraint | None = None


def verify_hstab_vertex(g: Graph, x: Sequence) -> VertexReport:
    """Check membership, integrality and the rank of the tight rows at ``x``."""
    x = _check_dim(g, x)
    non_integral = any(v.denominator != 1 for v in x)
    member, bad = hstab_membership(g, x)
    if not member:
        return VertexReport(False, non_integral, violated=bad)
    tight = _tight(g, x)
    rank = rational_rank(c.row for c in tight) if tight else 0
    return VertexReport(True, non_integral, tight, rank, rank == g.n)


# fractional chromatic number ----------------------------------------------


def fractional_chromatic_hperfect(g: Graph) -> Fraction:
    """Fractional chromatic number of an h-perfect graph.

    ``max(omega, 2k/(k-1))`` with ``k`` the shortest odd circuit length; the
    circuit term is decreasing in ``k``.  The result is meaningless for
    graphs that are not h-perfect.
    """
    w = Fraction(omega(g))
    odd = shortest_odd_cycle(g)
    if odd is None:
        return w
    k = odd[0]
    return max(w, Fraction(2 * k, k - 1))
